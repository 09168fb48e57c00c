#pragma once

#include <algorithm>
#include <optional>
#include <string>

#include "apap/fundamental.hpp"
#include "apap/lie_algebra.hpp"
#include "apap/structure.hpp"
#include "apap/tensor.hpp"

namespace apap {

enum class MetricKind { G, GTilde };

inline std::string metric_kind_name(MetricKind m) {
  return m == MetricKind::G ? "g" : "g~";
}

namespace detail {

inline const Mat3& metric_of(const StructurePack& p, MetricKind m) {
  return m == MetricKind::G ? p.g : p.g_tilde;
}

inline Rational bilinear(const Mat3& m, const Vec3& x, const Vec3& y) {
  Rational sum;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) sum += m(i, j) * x(i) * y(j);
  return sum;
}

inline bool subset_of(const ClassSet& membership, const ClassSet& allowed) {
  return std::includes(allowed.begin(), allowed.end(), membership.begin(),
                       membership.end());
}

}  // namespace detail

/// Literal ad-invariance check m([x,y],z) = m(x,[y,z]) over all 27 basis
/// triples, with the first violating triple as witness.
struct KillingMetricVerdict {
  struct Witness {
    int i, j, k;
    Rational lhs, rhs;
  };
  bool holds = true;
  std::optional<Witness> witness;
};

inline KillingMetricVerdict is_killing_metric(const StructureConstants& s,
                                              MetricKind which) {
  require_jacobi(s);
  const StructurePack p = standard_structure();
  const Mat3& m = detail::metric_of(p, which);
  KillingMetricVerdict v;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        const Rational lhs =
            detail::bilinear(m, s.basis_bracket(i, j), basis_vector(k));
        const Rational rhs =
            detail::bilinear(m, basis_vector(i), s.basis_bracket(j, k));
        if (lhs != rhs) {
          v.holds = false;
          v.witness = KillingMetricVerdict::Witness{i, j, k, lhs, rhs};
          return v;
        }
      }
  return v;
}

/// Class-coefficient characterizations of the Killing metrics:
/// g is Killing iff membership lies in F8+F10 with 2*lambda = -nu;
/// g~ is Killing iff membership lies in F8+F9+F10 with 2*lambda = mu = nu.
inline bool killing_metric_class_condition(const ClassDecomposition& d,
                                           MetricKind which) {
  if (which == MetricKind::G)
    return detail::subset_of(d.membership,
                             {BasicClass::F8, BasicClass::F10}) &&
           Rational(2) * d.lambda == -d.nu;
  return detail::subset_of(
             d.membership,
             {BasicClass::F8, BasicClass::F9, BasicClass::F10}) &&
         Rational(2) * d.lambda == d.mu && d.mu == d.nu;
}

/// Literal check of phi[x,y] = [x,phi y] over the 9 ordered basis pairs.
struct BiinvariantVerdict {
  struct Witness {
    int i, j;
    Vec3 lhs, rhs;
  };
  bool holds = true;
  std::optional<Witness> witness;
};

inline BiinvariantVerdict is_biinvariant_phi(const StructureConstants& s) {
  require_jacobi(s);
  const StructurePack p = standard_structure();
  BiinvariantVerdict v;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      const Vec3 lhs =
          phi_apply(p.phi, bracket(s, basis_vector(i), basis_vector(j)));
      const Vec3 rhs =
          bracket(s, basis_vector(i), phi_apply(p.phi, basis_vector(j)));
      if (lhs != rhs) {
        v.holds = false;
        v.witness = BiinvariantVerdict::Witness{i, j, lhs, rhs};
        return v;
      }
    }
  return v;
}

/// Stated class condition for bi-invariance: membership within
/// F4+F5+F8+F10 and 2*lambda = nu. May disagree with the literal check on
/// pure F4/F5 inputs; callers report both verdicts side by side.
inline bool biinvariant_class_condition(const ClassDecomposition& d) {
  return detail::subset_of(d.membership,
                           {BasicClass::F4, BasicClass::F5, BasicClass::F8,
                            BasicClass::F10}) &&
         Rational(2) * d.lambda == d.nu;
}

/// Killing property of xi: for left-invariant fields the Lie derivative of
/// g along xi reduces to (L_xi g)(E_i,E_j) = -g([E0,E_i],E_j)
/// - g(E_i,[E0,E_j]). Also evaluates the class condition
/// membership within {F1, F8, F10}.
struct KillingXiVerdict {
  struct Witness {
    int i, j;
    Rational value;
  };
  bool holds = true;
  std::optional<Witness> witness;
  bool class_condition = false;
};

inline KillingXiVerdict is_killing_xi(const StructureConstants& s) {
  require_jacobi(s);
  const StructurePack p = standard_structure();
  KillingXiVerdict v;
  for (int i = 0; i < kDim && v.holds; ++i)
    for (int j = 0; j < kDim; ++j) {
      const Rational value =
          -detail::bilinear(p.g, s.basis_bracket(0, i), basis_vector(j)) -
          detail::bilinear(p.g, basis_vector(i), s.basis_bracket(0, j));
      if (!value.is_zero()) {
        v.holds = false;
        v.witness = KillingXiVerdict::Witness{i, j, value};
        break;
      }
    }
  const ClassDecomposition d = classify(fundamental_tensor(s));
  v.class_condition = detail::subset_of(
      d.membership, {BasicClass::F1, BasicClass::F8, BasicClass::F10});
  return v;
}

}  // namespace apap
