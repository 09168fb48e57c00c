#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "apap/tensor.hpp"

namespace apap {

/// Structure constants of a 3-dimensional Lie algebra in the fixed basis
/// {E0,E1,E2}. Only the ordered pairs (0,1), (0,2), (1,2) are stored;
/// antisymmetry is structural.
struct StructureConstants {
  Vec3 c01;  // [E0,E1] components
  Vec3 c02;  // [E0,E2] components
  Vec3 c12;  // [E1,E2] components

  // [E_i,E_j] as a component vector, for any ordered pair.
  Vec3 basis_bracket(int i, int j) const {
    if (i == j) return Vec3{};
    if (i > j) return -basis_bracket(j, i);
    if (i == 0) return j == 1 ? c01 : c02;
    return c12;
  }

  // The coefficient C_ij^k.
  Rational c(int i, int j, int k) const { return basis_bracket(i, j)(k); }

  friend bool operator==(const StructureConstants&,
                         const StructureConstants&) = default;
};

inline StructureConstants abelian_algebra() { return StructureConstants{}; }

/// Bilinear antisymmetric extension of the basis brackets.
inline Vec3 bracket(const StructureConstants& s, const Vec3& x,
                    const Vec3& y) {
  Vec3 out;
  for (int i = 0; i < kDim; ++i) {
    for (int j = i + 1; j < kDim; ++j) {
      const Rational coeff = x(i) * y(j) - x(j) * y(i);
      if (coeff.is_zero()) continue;
      out += coeff * s.basis_bracket(i, j);
    }
  }
  return out;
}

/// Cyclic sum [[E0,E1],E2] + [[E1,E2],E0] + [[E2,E0],E1], the only
/// independent Jacobi triple in dimension 3. Zero iff the constants
/// define a Lie algebra.
inline Vec3 jacobi_residual(const StructureConstants& s) {
  Vec3 sum;
  constexpr int triple[3] = {0, 1, 2};
  for (int n = 0; n < 3; ++n) {
    const int i = triple[n];
    const int j = triple[(n + 1) % 3];
    const int k = triple[(n + 2) % 3];
    sum += bracket(s, s.basis_bracket(i, j), basis_vector(k));
  }
  return sum;
}

inline bool jacobi_holds(const StructureConstants& s) {
  return jacobi_residual(s).is_zero();
}

inline void require_jacobi(const StructureConstants& s) {
  const Vec3 residual = jacobi_residual(s);
  if (!residual.is_zero())
    throw std::domain_error(
        "Jacobi identity violated for triple (E0,E1,E2): residual (" +
        residual(0).str() + ", " + residual(1).str() + ", " +
        residual(2).str() + ")");
}

/// The six structure constants that remain free once the Jacobi identity
/// fixes C_12^0, C_02^1, C_01^2.
struct JacobiSixParams {
  Rational c01_0, c02_0, c12_1, c12_2, c01_1, c02_2;
};

namespace detail {

// The Jacobi identity reduces to three equations, each linear in exactly
// one of the dependent coefficients:
//   (C01_1 + C02_2) * C12_0 = C01_0*C12_1 + C02_0*C12_2
//   (C01_0 - C12_2) * C02_1 = C02_0*C01_1 - C12_1*C02_2
//   (C02_0 + C12_1) * C01_2 = C01_0*C02_2 + C01_1*C12_2
struct JacobiEquation {
  const char* denominator_name;
  Rational denominator;
  Rational numerator;
};

inline std::array<JacobiEquation, 3> jacobi_equations(
    const JacobiSixParams& p) {
  return {JacobiEquation{"C01_1 + C02_2", p.c01_1 + p.c02_2,
                         p.c01_0 * p.c12_1 + p.c02_0 * p.c12_2},
          JacobiEquation{"C01_0 - C12_2", p.c01_0 - p.c12_2,
                         p.c02_0 * p.c01_1 - p.c12_1 * p.c02_2},
          JacobiEquation{"C02_0 + C12_1", p.c02_0 + p.c12_1,
                         p.c01_0 * p.c02_2 + p.c01_1 * p.c12_2}};
}

inline StructureConstants assemble(const JacobiSixParams& p,
                                   const Rational& c12_0,
                                   const Rational& c02_1,
                                   const Rational& c01_2) {
  StructureConstants s;
  s.c01(0) = p.c01_0;
  s.c01(1) = p.c01_1;
  s.c01(2) = c01_2;
  s.c02(0) = p.c02_0;
  s.c02(1) = c02_1;
  s.c02(2) = p.c02_2;
  s.c12(0) = c12_0;
  s.c12(1) = p.c12_1;
  s.c12(2) = p.c12_2;
  return s;
}

}  // namespace detail

/// Completes six free constants to a full Lie algebra via the quotient
/// formulas. Requires all three denominators nonzero; the result is
/// confirmed against jacobi_residual before being returned.
inline StructureConstants jacobi_complete(const JacobiSixParams& p) {
  const auto eqs = detail::jacobi_equations(p);
  std::array<Rational, 3> solved;
  for (int n = 0; n < 3; ++n) {
    if (eqs[n].denominator.is_zero())
      throw std::domain_error(std::string("degenerate denominator ") +
                              eqs[n].denominator_name +
                              " = 0 in Jacobi completion");
    solved[n] = eqs[n].numerator / eqs[n].denominator;
  }
  const StructureConstants s =
      detail::assemble(p, solved[0], solved[1], solved[2]);
  if (!jacobi_holds(s))
    throw std::logic_error(
        "Jacobi completion produced a nonzero residual; quotient formulas "
        "are inconsistent for these parameters");
  return s;
}

/// Lenient variant used by parameter sweeps: a zero denominator with zero
/// numerator leaves that coefficient free and we pick 0; a zero denominator
/// with nonzero numerator admits no Lie algebra and yields nullopt.
inline std::optional<StructureConstants> jacobi_solve(
    const JacobiSixParams& p) {
  const auto eqs = detail::jacobi_equations(p);
  std::array<Rational, 3> solved;
  for (int n = 0; n < 3; ++n) {
    if (eqs[n].denominator.is_zero()) {
      if (!eqs[n].numerator.is_zero()) return std::nullopt;
      solved[n] = Rational(0);
    } else {
      solved[n] = eqs[n].numerator / eqs[n].denominator;
    }
  }
  const StructureConstants s =
      detail::assemble(p, solved[0], solved[1], solved[2]);
  if (!jacobi_holds(s)) return std::nullopt;
  return s;
}

enum class Family { F1, F4, F5, F8, F9, F10, F11, Example };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::F1: return "F1";
    case Family::F4: return "F4";
    case Family::F5: return "F5";
    case Family::F8: return "F8";
    case Family::F9: return "F9";
    case Family::F10: return "F10";
    case Family::F11: return "F11";
    case Family::Example: return "Example";
  }
  throw std::logic_error("unknown family");
}

inline std::optional<Family> family_from_name(std::string_view name) {
  if (name == "F1") return Family::F1;
  if (name == "F4") return Family::F4;
  if (name == "F5") return Family::F5;
  if (name == "F8") return Family::F8;
  if (name == "F9") return Family::F9;
  if (name == "F10") return Family::F10;
  if (name == "F11") return Family::F11;
  if (name == "Example") return Family::Example;
  return std::nullopt;
}

/// A named one- or two-parameter family of Lie algebras. F1 and F11 take
/// (alpha, beta); F4, F5, F8, F9, F10 take alpha; Example takes (a1, a2).
struct CatalogEntry {
  Family family;
  std::map<std::string, Rational> params;
};

namespace detail {

inline void check_params(const CatalogEntry& e,
                         std::initializer_list<const char*> required) {
  for (const char* name : required)
    if (!e.params.count(name))
      throw std::invalid_argument("family " + family_name(e.family) +
                                  " requires parameter '" + name + "'");
  if (e.params.size() != required.size())
    for (const auto& [name, value] : e.params) {
      bool ok = false;
      for (const char* r : required) ok = ok || name == r;
      if (!ok)
        throw std::invalid_argument("family " + family_name(e.family) +
                                    " does not take parameter '" + name +
                                    "'");
    }
}

}  // namespace detail

inline StructureConstants catalog_instantiate(const CatalogEntry& e) {
  StructureConstants s;
  auto param = [&e](const char* name) { return e.params.at(name); };
  switch (e.family) {
    case Family::F1: {
      detail::check_params(e, {"alpha", "beta"});
      s.c12(1) = param("alpha");
      s.c12(2) = -param("beta");
      break;
    }
    case Family::F4: {
      detail::check_params(e, {"alpha"});
      s.c01(2) = param("alpha");
      s.c02(1) = param("alpha");
      break;
    }
    case Family::F5: {
      detail::check_params(e, {"alpha"});
      s.c01(1) = param("alpha");
      s.c02(2) = param("alpha");
      break;
    }
    case Family::F8: {
      detail::check_params(e, {"alpha"});
      s.c01(2) = param("alpha");
      s.c02(1) = -param("alpha");
      s.c12(0) = Rational(2) * param("alpha");
      break;
    }
    case Family::F9: {
      detail::check_params(e, {"alpha"});
      s.c01(1) = param("alpha");
      s.c02(2) = -param("alpha");
      break;
    }
    case Family::F10: {
      detail::check_params(e, {"alpha"});
      s.c01(2) = -param("alpha");
      s.c02(1) = param("alpha");
      break;
    }
    case Family::F11: {
      detail::check_params(e, {"alpha", "beta"});
      s.c01(0) = param("alpha");
      s.c02(0) = param("beta");
      break;
    }
    case Family::Example: {
      detail::check_params(e, {"a1", "a2"});
      s.c01(1) = -param("a1");
      s.c01(2) = -param("a2");
      s.c02(1) = -param("a2");
      s.c02(2) = param("a1");
      break;
    }
  }
  return s;
}

inline CatalogEntry catalog_one(Family f, Rational alpha) {
  return CatalogEntry{f, {{"alpha", std::move(alpha)}}};
}

inline CatalogEntry catalog_two(Family f, Rational alpha, Rational beta) {
  if (f == Family::Example)
    return CatalogEntry{f, {{"a1", std::move(alpha)}, {"a2", std::move(beta)}}};
  return CatalogEntry{f,
                      {{"alpha", std::move(alpha)}, {"beta", std::move(beta)}}};
}

}  // namespace apap
