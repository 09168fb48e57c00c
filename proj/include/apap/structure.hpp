#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "apap/tensor.hpp"

namespace apap {

/// The fixed almost paracontact almost paracomplex Riemannian structure
/// tensors on the phi-basis, plus the associated metric. phi is stored
/// row-wise: row i holds the components of phi(E_i).
struct StructurePack {
  Mat3 phi;
  Vec3 xi;
  Vec3 eta;
  Mat3 g;
  Mat3 g_tilde;

  friend bool operator==(const StructurePack&, const StructurePack&) = default;
};

inline Vec3 phi_apply(const Mat3& phi, const Vec3& x) {
  Vec3 out;
  for (int j = 0; j < kDim; ++j) {
    Rational sum;
    for (int i = 0; i < kDim; ++i) sum += x(i) * phi(i, j);
    out(j) = sum;
  }
  return out;
}

/// phi E0 = 0, phi E1 = E2, phi E2 = E1, xi = E0, eta = dual of E0,
/// g = identity; g~(x,y) = g(x,phi y) + eta(x)eta(y).
inline StructurePack standard_structure() {
  StructurePack p;
  p.phi(1, 2) = Rational(1);
  p.phi(2, 1) = Rational(1);
  p.xi(0) = Rational(1);
  p.eta(0) = Rational(1);
  for (int i = 0; i < kDim; ++i) p.g(i, i) = Rational(1);
  p.g_tilde = make_tensor<2>([&p](const std::array<int, 2>& idx) {
    const auto [i, j] = std::pair(idx[0], idx[1]);
    Rational sum;
    for (int a = 0; a < kDim; ++a) sum += p.g(i, a) * p.phi(j, a);
    return sum + p.eta(i) * p.eta(j);
  });
  return p;
}

struct EllDecomposition {
  Mat3 l1, l2, l3;
};

/// Splits a (0,2)-tensor along the projectors h = phi^2 and v = eta(.)xi:
/// l1(S)(x,y) = S(hx,hy), l2(S)(x,y) = S(vx,vy),
/// l3(S)(x,y) = S(vx,hy) + S(hx,vy). Always sums back to S.
inline EllDecomposition ell_decompose(const Mat3& S) {
  const StructurePack p = standard_structure();
  // h and v as endomorphism matrices, row i = image of E_i.
  Mat3 h;
  for (int i = 0; i < kDim; ++i) {
    const Vec3 img = phi_apply(p.phi, phi_apply(p.phi, basis_vector(i)));
    for (int j = 0; j < kDim; ++j) h(i, j) = img(j);
  }
  Mat3 v;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) v(i, j) = p.eta(i) * p.xi(j);

  auto project = [&S](const Mat3& left, const Mat3& right) {
    return make_tensor<2>([&](const std::array<int, 2>& idx) {
      Rational sum;
      for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b)
          sum += left(idx[0], a) * right(idx[1], b) * S(a, b);
      return sum;
    });
  };

  EllDecomposition out;
  out.l1 = project(h, h);
  out.l2 = project(v, v);
  out.l3 = project(v, h) + project(h, v);
  if (out.l1 + out.l2 + out.l3 != S)
    throw std::logic_error("ell decomposition does not sum back to S");
  return out;
}

struct AxiomCheck {
  std::string name;
  bool holds;
  std::string residual;  // printable nonzero residual; "0" when holds
};

/// Evaluates every structure axiom as an explicit residual. All residuals
/// are zero exactly when the pack is a valid structure.
inline std::vector<AxiomCheck> verify_structure_axioms(
    const StructurePack& p) {
  std::vector<AxiomCheck> report;
  auto add = [&report](std::string name, const auto& residual) {
    const bool holds = residual.is_zero();
    report.push_back(
        {std::move(name), holds, holds ? "0" : residual.describe()});
  };
  auto add_scalar = [&report](std::string name, const Rational& residual) {
    const bool holds = residual.is_zero();
    report.push_back(
        {std::move(name), holds, holds ? "0" : residual.str()});
  };

  const Mat3 phi_sq = make_tensor<2>([&p](const std::array<int, 2>& idx) {
    Rational sum;
    for (int m = 0; m < kDim; ++m) sum += p.phi(idx[0], m) * p.phi(m, idx[1]);
    return sum;
  });
  add("phi^2 - (I - eta(.)xi)",
      make_tensor<2>([&](const std::array<int, 2>& idx) {
        const Rational identity = idx[0] == idx[1] ? Rational(1) : Rational(0);
        return phi_sq.at(idx) - identity + p.eta(idx[0]) * p.xi(idx[1]);
      }));

  Rational eta_xi;
  for (int i = 0; i < kDim; ++i) eta_xi += p.eta(i) * p.xi(i);
  add_scalar("eta(xi) - 1", eta_xi - Rational(1));

  add("eta o phi", make_tensor<1>([&p](const std::array<int, 1>& idx) {
        Rational sum;
        for (int j = 0; j < kDim; ++j) sum += p.phi(idx[0], j) * p.eta(j);
        return sum;
      }));

  add("phi(xi)", phi_apply(p.phi, p.xi));

  Rational trace;
  for (int i = 0; i < kDim; ++i) trace += p.phi(i, i);
  add_scalar("tr phi", trace);

  add("g(phi.,phi.) - g + eta(.)eta(.)",
      make_tensor<2>([&p](const std::array<int, 2>& idx) {
        Rational sum;
        for (int a = 0; a < kDim; ++a)
          for (int b = 0; b < kDim; ++b)
            sum += p.phi(idx[0], a) * p.phi(idx[1], b) * p.g(a, b);
        return sum - p.g.at(idx) + p.eta(idx[0]) * p.eta(idx[1]);
      }));

  add("g(.,xi) - eta", make_tensor<1>([&p](const std::array<int, 1>& idx) {
        Rational sum;
        for (int j = 0; j < kDim; ++j) sum += p.g(idx[0], j) * p.xi(j);
        return sum - p.eta(idx[0]);
      }));

  add("g~ - g(.,phi.) - eta(.)eta(.)",
      make_tensor<2>([&p](const std::array<int, 2>& idx) {
        Rational sum;
        for (int a = 0; a < kDim; ++a)
          sum += p.g(idx[0], a) * p.phi(idx[1], a);
        return p.g_tilde.at(idx) - sum - p.eta(idx[0]) * p.eta(idx[1]);
      }));

  return report;
}

inline bool all_axioms_hold(const std::vector<AxiomCheck>& report) {
  for (const AxiomCheck& check : report)
    if (!check.holds) return false;
  return true;
}

}  // namespace apap
