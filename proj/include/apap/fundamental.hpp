#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "apap/lie_algebra.hpp"
#include "apap/structure.hpp"
#include "apap/tensor.hpp"

namespace apap {

/// Levi-Civita connection coefficients: gamma(i,j,k) is the E_k component
/// of the covariant derivative of E_j along E_i.
struct Connection {
  Tensor<3> gamma;

  Vec3 derivative(int i, int j) const {
    Vec3 out;
    for (int k = 0; k < kDim; ++k) out(k) = gamma(i, j, k);
    return out;
  }

  friend bool operator==(const Connection&, const Connection&) = default;
};

/// Koszul formula in the orthonormal frame:
/// 2 Gamma_ij^k = C_ij^k + C_ki^j + C_kj^i.
inline Connection levi_civita(const StructureConstants& s) {
  require_jacobi(s);
  Connection conn;
  conn.gamma = make_tensor<3>([&s](const std::array<int, 3>& idx) {
    const auto [i, j, k] = std::tuple(idx[0], idx[1], idx[2]);
    return half(s.c(i, j, k) + s.c(k, i, j) + s.c(k, j, i));
  });
  return conn;
}

/// Fundamental tensor from the brackets alone:
/// 2F_ijk = g([E_i,phi E_j] - phi[E_i,E_j], E_k)
///        + g(phi[E_k,E_i] - [phi E_k,E_i], E_j)
///        + g([E_k,phi E_j] - [phi E_k,E_j], E_i).
inline Tensor<3> fundamental_tensor(const StructureConstants& s) {
  require_jacobi(s);
  const StructurePack p = standard_structure();
  auto phi_row = [&p](int i) { return phi_apply(p.phi, basis_vector(i)); };
  return make_tensor<3>([&](const std::array<int, 3>& idx) {
    const auto [i, j, k] = std::tuple(idx[0], idx[1], idx[2]);
    const Vec3 ei = basis_vector(i), ej = basis_vector(j),
               ek = basis_vector(k);
    const Vec3 term1 =
        bracket(s, ei, phi_row(j)) - phi_apply(p.phi, bracket(s, ei, ej));
    const Vec3 term2 =
        phi_apply(p.phi, bracket(s, ek, ei)) - bracket(s, phi_row(k), ei);
    const Vec3 term3 =
        bracket(s, ek, phi_row(j)) - bracket(s, phi_row(k), ej);
    return half(term1(k) + term2(j) + term3(i));
  });
}

/// Fundamental tensor from the connection, F(x,y,z) = g((nabla_x phi)y, z).
/// Must agree with the bracket route for every Lie algebra.
inline Tensor<3> fundamental_tensor_from_connection(const Connection& conn,
                                                    const StructurePack& p) {
  return make_tensor<3>([&](const std::array<int, 3>& idx) {
    const auto [i, j, k] = std::tuple(idx[0], idx[1], idx[2]);
    Rational sum;
    for (int m = 0; m < kDim; ++m)
      sum += p.phi(j, m) * conn.gamma(i, m, k) -
             conn.gamma(i, j, m) * p.phi(m, k);
    return sum;
  });
}

namespace detail {

// F(x,y,z) = F(x,z,y) and
// F(x,y,z) = -F(x,phi y,phi z) + eta(y)F(x,xi,z) + eta(z)F(x,y,xi).
inline void require_f_symmetries(const Tensor<3>& F) {
  const StructurePack p = standard_structure();
  for (int n = 0; n < Tensor<3>::entry_count; ++n) {
    const auto idx = Tensor<3>::unflatten(n);
    const auto [i, j, k] = std::tuple(idx[0], idx[1], idx[2]);
    if (F(i, j, k) != F(i, k, j))
      throw std::invalid_argument(
          "fundamental tensor symmetry F(x,y,z)=F(x,z,y) violated at (" +
          std::to_string(i) + "," + std::to_string(j) + "," +
          std::to_string(k) + ")");
    Rational rhs;
    for (int a = 0; a < kDim; ++a)
      for (int b = 0; b < kDim; ++b)
        rhs -= p.phi(j, a) * p.phi(k, b) * F(i, a, b);
    rhs += p.eta(j) * F(i, 0, k) + p.eta(k) * F(i, j, 0);
    if (F(i, j, k) != rhs)
      throw std::invalid_argument(
          "fundamental tensor structure symmetry violated at (" +
          std::to_string(i) + "," + std::to_string(j) + "," +
          std::to_string(k) + ")");
  }
}

}  // namespace detail

struct LeeForms {
  Vec3 theta;
  Vec3 theta_star;
  Vec3 omega;

  friend bool operator==(const LeeForms&, const LeeForms&) = default;
};

/// theta_k = sum_i F_iik, theta*_k = F_12k + F_21k, omega_k = F_00k.
inline LeeForms lee_forms(const Tensor<3>& F) {
  detail::require_f_symmetries(F);
  LeeForms out;
  for (int k = 0; k < kDim; ++k) {
    for (int i = 0; i < kDim; ++i) out.theta(k) += F(i, i, k);
    out.theta_star(k) = F(1, 2, k) + F(2, 1, k);
    out.omega(k) = F(0, 0, k);
  }
  return out;
}

enum class BasicClass { F1, F4, F5, F8, F9, F10, F11 };

inline std::string basic_class_name(BasicClass c) {
  switch (c) {
    case BasicClass::F1: return "F1";
    case BasicClass::F4: return "F4";
    case BasicClass::F5: return "F5";
    case BasicClass::F8: return "F8";
    case BasicClass::F9: return "F9";
    case BasicClass::F10: return "F10";
    case BasicClass::F11: return "F11";
  }
  throw std::logic_error("unknown basic class");
}

inline std::optional<BasicClass> basic_class_from_name(
    std::string_view name) {
  for (const BasicClass c :
       {BasicClass::F1, BasicClass::F4, BasicClass::F5, BasicClass::F8,
        BasicClass::F9, BasicClass::F10, BasicClass::F11})
    if (basic_class_name(c) == name) return c;
  return std::nullopt;
}

using ClassSet = std::set<BasicClass>;

/// Lee-form values and class-component coefficients read off a fundamental
/// tensor, together with the class membership they certify.
struct ClassDecomposition {
  Rational theta0, theta_star0, theta1, theta2;
  Rational omega1, omega2;
  Rational lambda, mu, nu;
  ClassSet membership;  // empty means F0
  Tensor<3> residual;   // F minus the reconstructed sum; zero when accepted

  friend bool operator==(const ClassDecomposition&,
                         const ClassDecomposition&) = default;
};

/// The component of F lying in one basic class, rebuilt from the
/// decomposition coefficients.
inline Tensor<3> class_component(BasicClass c, const ClassDecomposition& d) {
  Tensor<3> t;
  switch (c) {
    case BasicClass::F1:
      t(1, 1, 1) = d.theta1;
      t(1, 2, 2) = -d.theta1;
      t(2, 1, 1) = -d.theta2;
      t(2, 2, 2) = d.theta2;
      break;
    case BasicClass::F4: {
      const Rational v = half(d.theta0);
      t(1, 0, 1) = t(1, 1, 0) = v;
      t(2, 0, 2) = t(2, 2, 0) = v;
      break;
    }
    case BasicClass::F5: {
      const Rational v = half(d.theta_star0);
      t(1, 0, 2) = t(1, 2, 0) = v;
      t(2, 0, 1) = t(2, 1, 0) = v;
      break;
    }
    case BasicClass::F8:
      t(1, 0, 1) = t(1, 1, 0) = d.lambda;
      t(2, 0, 2) = t(2, 2, 0) = -d.lambda;
      break;
    case BasicClass::F9:
      t(1, 0, 2) = t(1, 2, 0) = d.mu;
      t(2, 0, 1) = t(2, 1, 0) = -d.mu;
      break;
    case BasicClass::F10:
      t(0, 1, 1) = d.nu;
      t(0, 2, 2) = -d.nu;
      break;
    case BasicClass::F11:
      t(0, 0, 1) = t(0, 1, 0) = d.omega1;
      t(0, 0, 2) = t(0, 2, 0) = d.omega2;
      break;
  }
  return t;
}

inline Tensor<3> reconstruct(const ClassDecomposition& d) {
  Tensor<3> sum;
  for (const BasicClass c :
       {BasicClass::F1, BasicClass::F4, BasicClass::F5, BasicClass::F8,
        BasicClass::F9, BasicClass::F10, BasicClass::F11})
    sum += class_component(c, d);
  return sum;
}

/// Reads the class coefficients off F and certifies membership in the
/// direct sum of the classes with nonzero coefficients. The F8/F4 split is
/// lambda = (F110 - F220)/2, theta0 = F110 + F220; the F9/F5 split is
/// mu = (F120 - F210)/2, theta*0 = F120 + F210; nu = (F011 - F022)/2.
inline ClassDecomposition classify(const Tensor<3>& F) {
  detail::require_f_symmetries(F);
  ClassDecomposition d;
  d.theta0 = F(1, 1, 0) + F(2, 2, 0);
  d.theta_star0 = F(1, 2, 0) + F(2, 1, 0);
  d.theta1 = F(1, 1, 1);
  d.theta2 = F(2, 2, 2);
  d.omega1 = F(0, 0, 1);
  d.omega2 = F(0, 0, 2);
  d.lambda = half(F(1, 1, 0) - F(2, 2, 0));
  d.mu = half(F(1, 2, 0) - F(2, 1, 0));
  d.nu = half(F(0, 1, 1) - F(0, 2, 2));

  if (!d.theta1.is_zero() || !d.theta2.is_zero())
    d.membership.insert(BasicClass::F1);
  if (!d.theta0.is_zero()) d.membership.insert(BasicClass::F4);
  if (!d.theta_star0.is_zero()) d.membership.insert(BasicClass::F5);
  if (!d.lambda.is_zero()) d.membership.insert(BasicClass::F8);
  if (!d.mu.is_zero()) d.membership.insert(BasicClass::F9);
  if (!d.nu.is_zero()) d.membership.insert(BasicClass::F10);
  if (!d.omega1.is_zero() || !d.omega2.is_zero())
    d.membership.insert(BasicClass::F11);

  d.residual = F - reconstruct(d);
  if (!d.residual.is_zero())
    throw std::domain_error("F outside F1+F4+F5+F8+F9+F10+F11: residual " +
                            d.residual.describe());
  return d;
}

/// Para-Sasakian is the theta(xi) = -2 cut of pure F4.
inline bool is_para_sasakian(const ClassDecomposition& d) {
  return d.membership == ClassSet{BasicClass::F4} &&
         d.theta0 == Rational(-2);
}

inline std::string class_label(const ClassSet& membership) {
  if (membership.empty()) return "F0";
  std::string label;
  for (const BasicClass c : membership) {
    if (!label.empty()) label += " ⊕ ";
    label += basic_class_name(c);
  }
  return label;
}

}  // namespace apap
