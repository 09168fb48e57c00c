#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "apap/fundamental.hpp"
#include "apap/lie_algebra.hpp"
#include "apap/structure.hpp"
#include "apap/tensor.hpp"

namespace apap {

/// Kulkarni-Nomizu product of two (0,2)-tensors.
inline Tensor<4> kulkarni_nomizu(const Mat3& a, const Mat3& b) {
  return make_tensor<4>([&](const std::array<int, 4>& idx) {
    const auto [x, y, z, w] = std::tuple(idx[0], idx[1], idx[2], idx[3]);
    return a(x, z) * b(y, w) - a(y, z) * b(x, w) + a(y, w) * b(x, z) -
           a(x, w) * b(y, z);
  });
}

/// (0,4) curvature tensor of a left-invariant metric:
/// R(E_i,E_j)E_k = nabla_i nabla_j E_k - nabla_j nabla_i E_k
///               - nabla_[E_i,E_j] E_k, lowered with the orthonormal g.
inline Tensor<4> riemann(const Connection& conn,
                         const StructureConstants& s) {
  return make_tensor<4>([&](const std::array<int, 4>& idx) {
    const auto [i, j, k, l] = std::tuple(idx[0], idx[1], idx[2], idx[3]);
    Rational sum;
    for (int m = 0; m < kDim; ++m)
      sum += conn.gamma(j, k, m) * conn.gamma(i, m, l) -
             conn.gamma(i, k, m) * conn.gamma(j, m, l) -
             s.c(i, j, m) * conn.gamma(m, k, l);
    return sum;
  });
}

struct CurvatureSymmetryCheck {
  std::string name;
  bool holds;
};

/// The four basic curvature symmetries: antisymmetry in the first pair,
/// antisymmetry in the second pair, pair-swap symmetry, first Bianchi.
inline std::vector<CurvatureSymmetryCheck> curvature_symmetry_checks(
    const Tensor<4>& R) {
  bool anti12 = true, anti34 = true, pair_swap = true, bianchi = true;
  for (int n = 0; n < Tensor<4>::entry_count; ++n) {
    const auto idx = Tensor<4>::unflatten(n);
    const auto [i, j, k, l] = std::tuple(idx[0], idx[1], idx[2], idx[3]);
    anti12 = anti12 && R(i, j, k, l) == -R(j, i, k, l);
    anti34 = anti34 && R(i, j, k, l) == -R(i, j, l, k);
    pair_swap = pair_swap && R(i, j, k, l) == R(k, l, i, j);
    bianchi = bianchi &&
              (R(i, j, k, l) + R(j, k, i, l) + R(k, i, j, l)).is_zero();
  }
  return {{"antisymmetry in slots (1,2)", anti12},
          {"antisymmetry in slots (3,4)", anti34},
          {"pair-swap symmetry", pair_swap},
          {"first Bianchi identity", bianchi}};
}

inline bool has_curvature_symmetries(const Tensor<4>& R) {
  for (const auto& check : curvature_symmetry_checks(R))
    if (!check.holds) return false;
  return true;
}

/// Sectional curvature of the 2-plane spanned by x, y:
/// k = -2 R(x,y,y,x) / (g^g)(x,y,y,x). Throws on a degenerate plane.
inline Rational sectional_curvature(const Tensor<4>& R, const Vec3& x,
                                    const Vec3& y) {
  const StructurePack p = standard_structure();
  const Tensor<4> gg = kulkarni_nomizu(p.g, p.g);
  const Rational denom = eval(gg, x, y, y, x);
  if (denom.is_zero())
    throw std::domain_error("degenerate 2-plane for sectional curvature");
  return Rational(-2) * eval(R, x, y, y, x) / denom;
}

/// Ricci data, star-Ricci data, scalar curvatures, and the sectional
/// curvatures of the two basic xi-sections and the basic phi-holomorphic
/// section.
struct CurvatureData {
  Tensor<4> R;
  Mat3 rho;
  Mat3 rho_star;
  Rational tau;
  Rational tau_star;
  Rational k01, k02, k12;

  friend bool operator==(const CurvatureData&, const CurvatureData&) = default;
};

inline CurvatureData curvature_invariants(const Tensor<4>& R) {
  if (!has_curvature_symmetries(R))
    throw std::invalid_argument("tensor lacks curvature symmetries");
  CurvatureData d;
  d.R = R;
  d.rho = metric_contract(R, 0, 3);
  for (int i = 0; i < kDim; ++i) d.tau += d.rho(i, i);
  // rho*(y,z) = sum_i R(E_i, y, z, phi E_i); phi E0 = 0.
  d.rho_star = make_tensor<2>([&R](const std::array<int, 2>& idx) {
    return R(1, idx[0], idx[1], 2) + R(2, idx[0], idx[1], 1);
  });
  for (int i = 0; i < kDim; ++i) d.tau_star += d.rho_star(i, i);
  d.k01 = sectional_curvature(R, basis_vector(0), basis_vector(1));
  d.k02 = sectional_curvature(R, basis_vector(0), basis_vector(2));
  d.k12 = sectional_curvature(R, basis_vector(1), basis_vector(2));
  return d;
}

/// Residual of the dimension-3 identity R = -g^(rho - (tau/4) g);
/// exactly zero for every curvature tensor in this dimension.
inline Tensor<4> r3_identity_residual(const Tensor<4>& R,
                                      const CurvatureData& d) {
  const StructurePack p = standard_structure();
  const Mat3 shifted = d.rho - (d.tau / Rational(4)) * p.g;
  return R + kulkarni_nomizu(p.g, shifted);
}

enum class EinsteinKind {
  Einstein,
  L1ParaEta,
  L2ParaEta,
  ParaEta,
  EtaParacomplex,
  None
};

inline std::string einstein_kind_name(EinsteinKind k) {
  switch (k) {
    case EinsteinKind::Einstein: return "Einstein";
    case EinsteinKind::L1ParaEta: return "l1-para-eta-Einstein";
    case EinsteinKind::L2ParaEta: return "l2-para-eta-Einstein";
    case EinsteinKind::ParaEta: return "para-eta-Einstein";
    case EinsteinKind::EtaParacomplex: return "eta-paracomplex-Einstein";
    case EinsteinKind::None: return "none";
  }
  throw std::logic_error("unknown Einstein kind");
}

struct EinsteinVerdict {
  EinsteinKind kind = EinsteinKind::None;
  std::optional<Rational> lambda;
  std::optional<Rational> mu;
  std::optional<Rational> nu;

  friend bool operator==(const EinsteinVerdict&,
                         const EinsteinVerdict&) = default;
};

namespace detail {

inline Mat3 eta_outer_eta(const StructurePack& p) {
  return make_tensor<2>([&p](const std::array<int, 2>& idx) {
    return p.eta(idx[0]) * p.eta(idx[1]);
  });
}

}  // namespace detail

/// Tries to express a symmetric rho in one specific Einstein-type form.
/// The solve is exact: candidate coefficients are read off the independent
/// components and the reconstruction must match rho identically.
inline std::optional<EinsteinVerdict> solve_einstein_form(EinsteinKind kind,
                                                          const Mat3& rho) {
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j)
      if (rho(i, j) != rho(j, i))
        throw std::invalid_argument("Ricci tensor must be symmetric");
  const StructurePack p = standard_structure();
  const Mat3 ee = detail::eta_outer_eta(p);
  EinsteinVerdict v;
  v.kind = kind;
  switch (kind) {
    case EinsteinKind::Einstein: {
      const Rational lam = rho(0, 0);
      if (rho != lam * p.g) return std::nullopt;
      v.lambda = lam;
      return v;
    }
    case EinsteinKind::L1ParaEta: {
      const Rational lam = rho(1, 1);
      if (rho != lam * (p.g - ee)) return std::nullopt;
      v.lambda = lam;
      return v;
    }
    case EinsteinKind::L2ParaEta: {
      const Rational lam = rho(0, 0);
      if (rho != lam * ee) return std::nullopt;
      v.lambda = lam;
      return v;
    }
    case EinsteinKind::ParaEta: {
      const Rational lam = rho(1, 1);
      const Rational nu = rho(0, 0) - lam;
      if (rho != lam * p.g + nu * ee) return std::nullopt;
      v.lambda = lam;
      v.nu = nu;
      return v;
    }
    case EinsteinKind::EtaParacomplex: {
      const Rational lam = rho(1, 1);
      const Rational mu = rho(1, 2);
      const Rational nu = rho(0, 0) - lam - mu;
      if (rho != lam * p.g + mu * p.g_tilde + nu * ee) return std::nullopt;
      v.lambda = lam;
      v.mu = mu;
      v.nu = nu;
      return v;
    }
    case EinsteinKind::None: return std::nullopt;
  }
  return std::nullopt;
}

/// Most specific applicable Einstein-type verdict, with fixed precedence
/// Einstein > l1-para-eta > l2-para-eta > para-eta > eta-paracomplex > none,
/// so a vanishing Ricci tensor reports Einstein with lambda = 0.
inline EinsteinVerdict einstein_classify(const Mat3& rho,
                                         const Rational& /*tau*/) {
  for (const EinsteinKind kind :
       {EinsteinKind::Einstein, EinsteinKind::L1ParaEta,
        EinsteinKind::L2ParaEta, EinsteinKind::ParaEta,
        EinsteinKind::EtaParacomplex})
    if (const auto v = solve_einstein_form(kind, rho)) return *v;
  return EinsteinVerdict{};
}

/// The closed Ricci and curvature forms stated per basic class. The F4,
/// F8, F9 classes share one row, so any nonempty membership inside
/// {F4,F8,F9} is accepted; F1, F5, F11 must be pure.
struct CorollaryResiduals {
  std::string row;
  Mat3 ricci_residual;
  Tensor<4> curvature_residual;
};

inline CorollaryResiduals curvature_form_check(const ClassSet& membership,
                                               const Tensor<4>& R,
                                               const Mat3& rho,
                                               const Rational& tau,
                                               const Rational& tau_star) {
  const StructurePack p = standard_structure();
  const Mat3 ee = detail::eta_outer_eta(p);
  const Tensor<4> gg = kulkarni_nomizu(p.g, p.g);
  const Tensor<4> gee = kulkarni_nomizu(p.g, ee);

  CorollaryResiduals out;
  if (membership == ClassSet{BasicClass::F1}) {
    out.row = "F1";
    out.ricci_residual = rho - half(tau) * (p.g - ee);
    out.curvature_residual =
        R - ((-tau / Rational(4)) * gg + half(tau) * gee);
  } else if (const ClassSet row489{BasicClass::F4, BasicClass::F8,
                                   BasicClass::F9};
             !membership.empty() &&
             std::includes(row489.begin(), row489.end(), membership.begin(),
                           membership.end())) {
    out.row = "F4/F8/F9";
    out.ricci_residual = rho - tau * ee;
    out.curvature_residual = R - ((tau / Rational(4)) * gg - tau * gee);
  } else if (membership == ClassSet{BasicClass::F5}) {
    out.row = "F5";
    out.ricci_residual = rho - (tau / Rational(3)) * p.g;
    out.curvature_residual = R + (tau / Rational(12)) * gg;
  } else if (membership == ClassSet{BasicClass::F11}) {
    out.row = "F11";
    // rho = -rho(phi.,phi.) + (tau/2) g + tau* g*, with g* = g~ - eta(.)eta(.)
    const Mat3 rho_phi = make_tensor<2>([&](const std::array<int, 2>& idx) {
      Rational sum;
      for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b)
          sum += p.phi(idx[0], a) * p.phi(idx[1], b) * rho(a, b);
      return sum;
    });
    const Mat3 g_star = p.g_tilde - ee;
    out.ricci_residual =
        rho + rho_phi - half(tau) * p.g - tau_star * g_star;
    out.curvature_residual = R + kulkarni_nomizu(rho, ee);
  } else {
    throw std::domain_error("no closed form stated for class " +
                            class_label(membership));
  }
  return out;
}

/// Full curvature pipeline for one Lie algebra.
inline CurvatureData curvature_of(const StructureConstants& s) {
  return curvature_invariants(riemann(levi_civita(s), s));
}

}  // namespace apap
