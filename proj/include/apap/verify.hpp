#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "apap/curvature.hpp"
#include "apap/fundamental.hpp"
#include "apap/json_io.hpp"
#include "apap/lie_algebra.hpp"
#include "apap/special.hpp"
#include "apap/structure.hpp"
#include "apap/tensor.hpp"

namespace apap {

struct CheckResult {
  std::string name;
  bool passed = true;
  bool informational = false;
  std::string detail;
};

inline bool suite_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.informational && !r.passed) return false;
  return true;
}

struct VerifyOptions {
  // Default parameter grid for families and random draws.
  std::vector<Rational> grid = {Rational(-2), Rational(-1),
                                Rational(-1, 2), Rational(1, 2), Rational(1),
                                Rational(2)};
  int random_algebras = 100;
  int sign_samples = 50;
  std::uint64_t seed = 0x5ee3d0fULL;
};

namespace verify_detail {

class RationalSource {
 public:
  explicit RationalSource(std::uint64_t seed) : rng_(seed) {}

  Rational small() {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    return Rational(num(rng_), den(rng_));
  }

  Rational nonzero() {
    Rational r = small();
    while (r.is_zero()) r = small();
    return r;
  }

  Vec3 vector() {
    Vec3 v;
    for (int i = 0; i < kDim; ++i) v(i) = small();
    return v;
  }

  Mat3 matrix() {
    return make_tensor<2>([this](const std::array<int, 2>&) { return small(); });
  }

  Mat3 symmetric_matrix() {
    Mat3 m;
    for (int i = 0; i < kDim; ++i)
      for (int j = i; j < kDim; ++j) m(i, j) = m(j, i) = small();
    return m;
  }

  template <int Rank>
  Tensor<Rank> tensor() {
    Tensor<Rank> t;
    for (int n = 0; n < Tensor<Rank>::entry_count; ++n) t.entry(n) = small();
    return t;
  }

  // Jacobi-valid constants with all three completion denominators nonzero.
  StructureConstants valid_algebra() {
    for (;;) {
      JacobiSixParams p{small(), small(), small(), small(), small(), small()};
      const auto eqs = detail::jacobi_equations(p);
      if (eqs[0].denominator.is_zero() || eqs[1].denominator.is_zero() ||
          eqs[2].denominator.is_zero())
        continue;
      return jacobi_complete(p);
    }
  }

 private:
  std::mt19937_64 rng_;
};

inline void expect(CheckResult& check, bool condition,
                   const std::string& on_fail) {
  if (!condition && check.passed) {
    check.passed = false;
    check.detail = on_fail;
  }
}

}  // namespace verify_detail

/// All catalog instances for one family over a parameter grid. Two-parameter
/// families take the full grid square.
inline std::vector<std::pair<CatalogEntry, StructureConstants>>
catalog_instances(Family f, const std::vector<Rational>& grid) {
  std::vector<std::pair<CatalogEntry, StructureConstants>> out;
  const bool two_params =
      f == Family::F1 || f == Family::F11 || f == Family::Example;
  if (two_params) {
    for (const Rational& a : grid)
      for (const Rational& b : grid) {
        CatalogEntry e = catalog_two(f, a, b);
        out.emplace_back(e, catalog_instantiate(e));
      }
  } else {
    for (const Rational& a : grid) {
      CatalogEntry e = catalog_one(f, a);
      out.emplace_back(e, catalog_instantiate(e));
    }
  }
  return out;
}

inline const std::vector<Family>& all_families() {
  static const std::vector<Family> families = {
      Family::F1, Family::F4,  Family::F5,  Family::F8,
      Family::F9, Family::F10, Family::F11, Family::Example};
  return families;
}

/// Independent oracle for the fundamental tensor: the closed component
/// table in terms of the structure constants.
inline Tensor<3> fijk_component_table(const StructureConstants& s) {
  Tensor<3> F;
  const Rational c12_1 = s.c(1, 2, 1), c12_2 = s.c(1, 2, 2);
  const Rational c01_0 = s.c(0, 1, 0), c02_0 = s.c(0, 2, 0);
  const Rational c01_1 = s.c(0, 1, 1), c02_2 = s.c(0, 2, 2);
  const Rational c12_0 = s.c(1, 2, 0), c02_1 = s.c(0, 2, 1),
                 c01_2 = s.c(0, 1, 2);
  F(1, 1, 1) = Rational(2) * c12_1;
  F(1, 2, 2) = -Rational(2) * c12_1;
  F(2, 1, 1) = Rational(2) * c12_2;
  F(2, 2, 2) = -Rational(2) * c12_2;
  F(1, 2, 0) = F(1, 0, 2) = c01_1;
  F(0, 2, 0) = F(0, 0, 2) = c01_0;
  F(2, 1, 0) = F(2, 0, 1) = c02_2;
  F(0, 1, 0) = F(0, 0, 1) = c02_0;
  F(1, 1, 0) = F(1, 0, 1) = half(c12_0 + c02_1 + c01_2);
  F(2, 2, 0) = F(2, 0, 2) = half(-c12_0 + c02_1 + c01_2);
  F(0, 1, 1) = c12_0 + c02_1 - c01_2;
  F(0, 2, 2) = -(c12_0 + c02_1 - c01_2);
  return F;
}

/// The closed curvature table per basic class, parametrized by the family
/// parameters. Everything not set is zero.
struct ExpectedCurvature {
  Tensor<4> R;
  Mat3 rho;
  Mat3 rho_star;
  Rational tau, tau_star, k01, k02, k12;
};

namespace verify_detail {

inline void set_riemann_component(Tensor<4>& R, int i, int j, int k, int l,
                                  const Rational& v) {
  R(i, j, k, l) = v;
  R(j, i, k, l) = -v;
  R(i, j, l, k) = -v;
  R(j, i, l, k) = v;
  R(k, l, i, j) = v;
  R(l, k, i, j) = -v;
  R(k, l, j, i) = -v;
  R(l, k, j, i) = v;
}

}  // namespace verify_detail

inline ExpectedCurvature expected_family_curvature(Family f,
                                                   const Rational& alpha,
                                                   const Rational& beta) {
  using verify_detail::set_riemann_component;
  ExpectedCurvature e;
  const Rational a2 = alpha * alpha, b2 = beta * beta;
  switch (f) {
    case Family::F1: {
      const Rational q = a2 + b2;
      set_riemann_component(e.R, 1, 2, 1, 2, q);
      e.rho(1, 1) = e.rho(2, 2) = -q;
      e.rho_star(1, 2) = e.rho_star(2, 1) = q;
      e.tau = Rational(-2) * q;
      e.k12 = -q;
      break;
    }
    case Family::F4:
    case Family::F9: {
      set_riemann_component(e.R, 0, 1, 0, 1, a2);
      set_riemann_component(e.R, 0, 2, 0, 2, a2);
      set_riemann_component(e.R, 1, 2, 1, 2, -a2);
      e.rho(0, 0) = Rational(-2) * a2;
      e.rho_star(1, 2) = e.rho_star(2, 1) = -a2;
      e.tau = Rational(-2) * a2;
      e.k01 = e.k02 = -a2;
      e.k12 = a2;
      break;
    }
    case Family::F5: {
      set_riemann_component(e.R, 0, 1, 0, 1, a2);
      set_riemann_component(e.R, 0, 2, 0, 2, a2);
      set_riemann_component(e.R, 1, 2, 1, 2, a2);
      e.rho(0, 0) = e.rho(1, 1) = e.rho(2, 2) = Rational(-2) * a2;
      e.rho_star(1, 2) = e.rho_star(2, 1) = a2;
      e.tau = Rational(-6) * a2;
      e.k01 = e.k02 = e.k12 = -a2;
      break;
    }
    case Family::F8: {
      set_riemann_component(e.R, 0, 1, 0, 1, -a2);
      set_riemann_component(e.R, 0, 2, 0, 2, -a2);
      set_riemann_component(e.R, 1, 2, 1, 2, a2);
      e.rho(0, 0) = Rational(2) * a2;
      e.rho_star(1, 2) = e.rho_star(2, 1) = a2;
      e.tau = Rational(2) * a2;
      e.k01 = e.k02 = a2;
      e.k12 = -a2;
      break;
    }
    case Family::F10:
      break;  // flat for every alpha
    case Family::F11: {
      const Rational ab = alpha * beta;
      set_riemann_component(e.R, 0, 1, 0, 1, a2);
      set_riemann_component(e.R, 0, 2, 0, 2, b2);
      set_riemann_component(e.R, 0, 1, 0, 2, ab);
      e.rho(0, 0) = -(a2 + b2);
      e.rho(1, 1) = -a2;
      e.rho(2, 2) = -b2;
      e.rho(1, 2) = e.rho(2, 1) = -ab;
      e.rho_star(0, 0) = Rational(-2) * ab;
      e.tau = Rational(-2) * (a2 + b2);
      e.tau_star = Rational(-2) * ab;
      e.k01 = -a2;
      e.k02 = -b2;
      break;
    }
    case Family::Example: {
      // mu = -a1, theta0 = -2 a2, with (alpha,beta) standing for (a1,a2).
      const Rational mu = -alpha;
      const Rational theta0 = Rational(-2) * beta;
      const Rational q = mu * mu + half(theta0) * half(theta0);
      set_riemann_component(e.R, 0, 1, 0, 1, q);
      set_riemann_component(e.R, 0, 2, 0, 2, q);
      set_riemann_component(e.R, 1, 2, 1, 2, -q);
      e.rho(0, 0) = Rational(-2) * q;
      e.rho_star(1, 2) = e.rho_star(2, 1) = -q;
      e.tau = Rational(-2) * q;
      e.k01 = e.k02 = -q;
      e.k12 = q;
      break;
    }
  }
  return e;
}

inline bool matches_expected(const CurvatureData& d,
                             const ExpectedCurvature& e) {
  return d.R == e.R && d.rho == e.rho && d.rho_star == e.rho_star &&
         d.tau == e.tau && d.tau_star == e.tau_star && d.k01 == e.k01 &&
         d.k02 == e.k02 && d.k12 == e.k12;
}

/// Executes every module's invariant block over the grid plus random
/// Jacobi-valid algebras. The bi-invariance literal-vs-condition comparison
/// is reported as informational only.
inline std::vector<CheckResult> run_theorem_suite(
    const VerifyOptions& opts = {}) {
  using verify_detail::RationalSource;
  std::vector<CheckResult> results;
  RationalSource random(opts.seed);

  std::vector<Rational> grid_with_zero = opts.grid;
  grid_with_zero.push_back(Rational(0));

  // Shared inputs.
  std::vector<StructureConstants> random_algebras;
  for (int n = 0; n < opts.random_algebras; ++n)
    random_algebras.push_back(random.valid_algebra());

  std::vector<StructureConstants> catalog_all;
  for (const Family f : all_families())
    for (const auto& [entry, s] : catalog_instances(f, opts.grid))
      catalog_all.push_back(s);

  const StructureConstants mixed = [] {
    // [E0,E1]=E2, [E0,E2]=-E1, [E1,E2]=E0.
    StructureConstants s;
    s.c01(2) = Rational(1);
    s.c02(1) = Rational(-1);
    s.c12(0) = Rational(1);
    return s;
  }();

  std::vector<StructureConstants> everything = catalog_all;
  everything.push_back(mixed);
  everything.push_back(abelian_algebra());
  everything.insert(everything.end(), random_algebras.begin(),
                    random_algebras.end());

  const StructurePack pack = standard_structure();

  // --- exact_core -------------------------------------------------------
  {
    CheckResult check{"exact_core/field-axioms"};
    for (int n = 0; n < 200 && check.passed; ++n) {
      const Rational a = random.small(), b = random.small(),
                     c = random.small();
      verify_detail::expect(check, (a + b) + c == a + (b + c),
                            "addition associativity failed");
      verify_detail::expect(check, (a * b) * c == a * (b * c),
                            "multiplication associativity failed");
      verify_detail::expect(check, a * (b + c) == a * b + a * c,
                            "distributivity failed");
      verify_detail::expect(check, (a + (-a)).is_zero(),
                            "additive inverse failed");
      verify_detail::expect(check, a + Rational(0) == a,
                            "additive identity failed");
      verify_detail::expect(check, a * Rational(1) == a,
                            "multiplicative identity failed");
      if (!a.is_zero())
        verify_detail::expect(check, a * (Rational(1) / a) == Rational(1),
                              "multiplicative inverse failed");
      verify_detail::expect(check, (a < b) == ((a - b).sign() < 0),
                            "ordering inconsistent with subtraction");
    }
    results.push_back(check);
  }
  {
    CheckResult check{"exact_core/contract-scalar-multiplication"};
    for (int n = 0; n < 20 && check.passed; ++n) {
      const auto t = random.tensor<4>();
      const Rational c = random.small();
      for (int a = 0; a < 4 && check.passed; ++a)
        for (int b = a + 1; b < 4; ++b)
          verify_detail::expect(
              check, metric_contract(c * t, a, b) == c * metric_contract(t, a, b),
              "contraction does not commute with scalar multiplication");
    }
    results.push_back(check);
  }
  {
    CheckResult check{"exact_core/double-contraction"};
    for (int n = 0; n < 20 && check.passed; ++n) {
      const auto t = random.tensor<4>();
      const Rational two_step =
          metric_contract(metric_contract(t, 0, 3), 0, 1).value();
      Rational one_pass;
      for (int i = 0; i < kDim; ++i)
        for (int a = 0; a < kDim; ++a) one_pass += t(i, a, a, i);
      verify_detail::expect(check, two_step == one_pass,
                            "double contraction mismatch");
    }
    results.push_back(check);
  }

  // --- lie_algebra ------------------------------------------------------
  {
    CheckResult check{"lie_algebra/catalog-jacobi"};
    for (const Family f : all_families())
      for (const auto& [entry, s] : catalog_instances(f, grid_with_zero))
        verify_detail::expect(check, jacobi_holds(s),
                              "catalog instance of " + family_name(f) +
                                  " violates the Jacobi identity");
    results.push_back(check);
  }
  {
    CheckResult check{"lie_algebra/jacobi-complete-grid"};
    const std::vector<Rational> small_grid = {Rational(-1), Rational(0),
                                              Rational(1), Rational(2)};
    int tested = 0, degenerate = 0;
    for (const Rational& a : small_grid)
      for (const Rational& b : small_grid)
        for (const Rational& c : small_grid)
          for (const Rational& d : small_grid)
            for (const Rational& e : small_grid)
              for (const Rational& f : small_grid) {
                const JacobiSixParams p{a, b, c, d, e, f};
                const auto eqs = detail::jacobi_equations(p);
                if (eqs[0].denominator.is_zero() ||
                    eqs[1].denominator.is_zero() ||
                    eqs[2].denominator.is_zero()) {
                  ++degenerate;
                  continue;
                }
                ++tested;
                verify_detail::expect(
                    check, jacobi_holds(jacobi_complete(p)),
                    "completion left a nonzero Jacobi residual");
              }
    if (check.passed)
      check.detail = std::to_string(tested) + " completions verified, " +
                     std::to_string(degenerate) + " degenerate points skipped";
    results.push_back(check);
  }
  {
    CheckResult check{"lie_algebra/bracket-bilinearity"};
    for (int n = 0; n < 25 && check.passed; ++n) {
      const StructureConstants s =
          random_algebras[n % random_algebras.size()];
      const Vec3 x = random.vector(), y = random.vector(), z = random.vector();
      const Rational a = random.small(), b = random.small();
      verify_detail::expect(
          check,
          bracket(s, a * x + b * y, z) ==
              a * bracket(s, x, z) + b * bracket(s, y, z),
          "bracket is not bilinear");
      verify_detail::expect(check, bracket(s, x, x).is_zero(),
                            "bracket(x,x) is not zero");
      verify_detail::expect(check, bracket(s, x, y) == -bracket(s, y, x),
                            "bracket is not antisymmetric");
    }
    results.push_back(check);
  }

  // --- apap_structure ---------------------------------------------------
  {
    CheckResult check{"structure/axioms"};
    verify_detail::expect(check,
                          all_axioms_hold(verify_structure_axioms(pack)),
                          "standard structure violates an axiom");
    results.push_back(check);
  }
  {
    CheckResult check{"structure/phi-g-symmetric"};
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) {
        const Vec3 pi = phi_apply(pack.phi, basis_vector(i));
        const Vec3 pj = phi_apply(pack.phi, basis_vector(j));
        verify_detail::expect(
            check,
            eval(pack.g, pi, basis_vector(j)) ==
                eval(pack.g, basis_vector(i), pj),
            "phi is not g-symmetric");
      }
    results.push_back(check);
  }
  {
    CheckResult check{"structure/gtilde-compatibility"};
    for (int i = 0; i < kDim; ++i) {
      const Vec3 ei = basis_vector(i);
      verify_detail::expect(check,
                            eval(pack.g_tilde, ei, pack.xi) == pack.eta(i),
                            "g~(x,xi) != eta(x)");
      for (int j = 0; j < kDim; ++j) {
        const Vec3 ej = basis_vector(j);
        verify_detail::expect(
            check,
            eval(pack.g_tilde, phi_apply(pack.phi, ei),
                 phi_apply(pack.phi, ej)) ==
                eval(pack.g_tilde, ei, ej) - pack.eta(i) * pack.eta(j),
            "g~ compatibility relation failed");
      }
    }
    results.push_back(check);
  }
  {
    CheckResult check{"structure/gtilde-signature"};
    const Vec3 plus = basis_vector(1) + basis_vector(2);
    const Vec3 minus = basis_vector(1) - basis_vector(2);
    verify_detail::expect(check,
                          eval(pack.g_tilde, plus, plus) == Rational(2),
                          "g~ on E1+E2 should be +2");
    verify_detail::expect(check,
                          eval(pack.g_tilde, minus, minus) == Rational(-2),
                          "g~ on E1-E2 should be -2");
    verify_detail::expect(check, eval(pack.g_tilde, plus, minus).is_zero(),
                          "E1+E2 and E1-E2 should be g~-orthogonal");
    verify_detail::expect(
        check, eval(pack.g_tilde, basis_vector(0), basis_vector(0)) ==
                   Rational(1),
        "g~ on E0 should be +1");
    verify_detail::expect(check,
                          eval(pack.g_tilde, basis_vector(0), plus).is_zero() &&
                              eval(pack.g_tilde, basis_vector(0), minus)
                                  .is_zero(),
                          "E0 should be g~-orthogonal to the distribution");
    // Restriction to span(E1,E2) squares to the identity with zero trace,
    // hence eigenvalues +1 and -1.
    const Mat3& gt = pack.g_tilde;
    verify_detail::expect(
        check,
        gt(1, 1) * gt(1, 1) + gt(1, 2) * gt(2, 1) == Rational(1) &&
            gt(2, 1) * gt(1, 2) + gt(2, 2) * gt(2, 2) == Rational(1) &&
            (gt(1, 1) * gt(1, 2) + gt(1, 2) * gt(2, 2)).is_zero() &&
            (gt(1, 1) + gt(2, 2)).is_zero(),
        "restricted g~ does not have eigenvalues +1, -1");
    results.push_back(check);
  }
  {
    CheckResult check{"structure/ell-direct-sum"};
    const Mat3 eta_eta = make_tensor<2>([&](const std::array<int, 2>& idx) {
      return pack.eta(idx[0]) * pack.eta(idx[1]);
    });
    const EllDecomposition of_g = ell_decompose(pack.g);
    verify_detail::expect(check,
                          of_g.l1 == pack.g - eta_eta &&
                              of_g.l2 == eta_eta && of_g.l3.is_zero(),
                          "ell decomposition of g is wrong");
    const EllDecomposition of_gt = ell_decompose(pack.g_tilde);
    verify_detail::expect(check,
                          of_gt.l1 == pack.g_tilde - eta_eta &&
                              of_gt.l2 == eta_eta && of_gt.l3.is_zero(),
                          "ell decomposition of g~ is wrong");
    for (int n = 0; n < 20 && check.passed; ++n) {
      const Mat3 S = random.matrix();
      const EllDecomposition d = ell_decompose(S);
      verify_detail::expect(check, d.l1 + d.l2 + d.l3 == S,
                            "ell pieces do not sum to S");
      const EllDecomposition dd1 = ell_decompose(d.l1);
      const EllDecomposition dd2 = ell_decompose(d.l2);
      const EllDecomposition dd3 = ell_decompose(d.l3);
      verify_detail::expect(
          check,
          dd1.l1 == d.l1 && dd1.l2.is_zero() && dd1.l3.is_zero() &&
              dd2.l2 == d.l2 && dd2.l1.is_zero() && dd2.l3.is_zero() &&
              dd3.l3 == d.l3 && dd3.l1.is_zero() && dd3.l2.is_zero(),
          "ell decomposition is not a direct sum");
    }
    results.push_back(check);
  }

  // --- fundamental ------------------------------------------------------
  {
    CheckResult check{"fundamental/dual-path-agreement"};
    for (const StructureConstants& s : everything) {
      const Tensor<3> via_brackets = fundamental_tensor(s);
      const Tensor<3> via_connection =
          fundamental_tensor_from_connection(levi_civita(s), pack);
      verify_detail::expect(check, via_brackets == via_connection,
                            "bracket and connection routes disagree");
    }
    results.push_back(check);
  }
  {
    CheckResult check{"fundamental/symmetry-properties"};
    for (const StructureConstants& s : everything) {
      try {
        detail::require_f_symmetries(fundamental_tensor(s));
      } catch (const std::invalid_argument& err) {
        verify_detail::expect(check, false, err.what());
      }
    }
    results.push_back(check);
  }
  {
    CheckResult check{"fundamental/component-table"};
    for (const StructureConstants& s : everything)
      verify_detail::expect(check,
                            fundamental_tensor(s) == fijk_component_table(s),
                            "component table violated");
    results.push_back(check);
  }
  {
    CheckResult check{"fundamental/class-roundtrip"};
    int degenerate = 0;
    for (const Family f : all_families()) {
      if (f == Family::Example) continue;
      for (const auto& [entry, s] : catalog_instances(f, grid_with_zero)) {
        const ClassDecomposition d = classify(fundamental_tensor(s));
        const Rational alpha = entry.params.count("alpha")
                                   ? entry.params.at("alpha")
                                   : Rational(0);
        const Rational beta = entry.params.count("beta")
                                  ? entry.params.at("beta")
                                  : Rational(0);
        const bool zero_params =
            alpha.is_zero() &&
            (!entry.params.count("beta") || beta.is_zero());
        if (zero_params) {
          ++degenerate;
          verify_detail::expect(check, d.membership.empty(),
                                "zero parameters should degenerate to F0");
          continue;
        }
        bool ok = true;
        switch (f) {
          case Family::F1:
            ok = d.membership == ClassSet{BasicClass::F1} &&
                 d.theta1 == Rational(2) * alpha &&
                 d.theta2 == Rational(2) * beta;
            // A zero alpha or beta still leaves a pure F1 manifold.
            break;
          case Family::F4:
            ok = d.membership == ClassSet{BasicClass::F4} &&
                 d.theta0 == Rational(2) * alpha;
            break;
          case Family::F5:
            ok = d.membership == ClassSet{BasicClass::F5} &&
                 d.theta_star0 == Rational(2) * alpha;
            break;
          case Family::F8:
            ok = d.membership == ClassSet{BasicClass::F8} &&
                 d.lambda == alpha;
            break;
          case Family::F9:
            ok = d.membership == ClassSet{BasicClass::F9} && d.mu == alpha;
            break;
          case Family::F10:
            ok = d.membership == ClassSet{BasicClass::F10} &&
                 d.nu == Rational(2) * alpha;
            break;
          case Family::F11:
            ok = d.membership == ClassSet{BasicClass::F11} &&
                 d.omega2 == alpha && d.omega1 == beta;
            break;
          default: break;
        }
        verify_detail::expect(
            check, ok && d.residual.is_zero(),
            "class round-trip failed for " + family_name(f));
      }
    }
    // Worked-example family: membership tracks which of a1, a2 vanish.
    for (const auto& [entry, s] :
         catalog_instances(Family::Example, grid_with_zero)) {
      const ClassDecomposition d = classify(fundamental_tensor(s));
      const Rational a1 = entry.params.at("a1");
      const Rational a2 = entry.params.at("a2");
      ClassSet want;
      if (!a2.is_zero()) want.insert(BasicClass::F4);
      if (!a1.is_zero()) want.insert(BasicClass::F9);
      verify_detail::expect(check,
                            d.membership == want && d.mu == -a1 &&
                                d.theta0 == Rational(-2) * a2 &&
                                d.residual.is_zero(),
                            "Example family round-trip failed");
    }
    if (check.passed)
      check.detail =
          std::to_string(degenerate) + " zero-parameter degenerations to F0";
    results.push_back(check);
  }
  {
    CheckResult check{"fundamental/reconstruction"};
    for (const StructureConstants& s : everything) {
      const Tensor<3> F = fundamental_tensor(s);
      const ClassDecomposition d = classify(F);
      verify_detail::expect(check, reconstruct(d) == F,
                            "reconstructed class sum differs from F");
    }
    results.push_back(check);
  }

  // --- curvature --------------------------------------------------------
  {
    CheckResult check{"curvature/symmetries-bianchi-r3"};
    for (const StructureConstants& s : everything) {
      const Tensor<4> R = riemann(levi_civita(s), s);
      for (const auto& sym : curvature_symmetry_checks(R))
        verify_detail::expect(check, sym.holds, sym.name + " failed");
      const CurvatureData d = curvature_invariants(R);
      for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
          verify_detail::expect(check, d.rho(i, j) == d.rho(j, i),
                                "Ricci tensor is not symmetric");
      verify_detail::expect(check,
                            r3_identity_residual(R, d).is_zero(),
                            "3D curvature identity residual is nonzero");
    }
    results.push_back(check);
  }
  {
    CheckResult check{"curvature/theorem-table"};
    for (const Family f : all_families()) {
      for (const auto& [entry, s] : catalog_instances(f, opts.grid)) {
        const Rational alpha = entry.params.count("alpha")
                                   ? entry.params.at("alpha")
                                   : entry.params.at("a1");
        const Rational beta = entry.params.count("beta")
                                  ? entry.params.at("beta")
                                  : (entry.params.count("a2")
                                         ? entry.params.at("a2")
                                         : Rational(0));
        verify_detail::expect(
            check,
            matches_expected(curvature_of(s),
                             expected_family_curvature(f, alpha, beta)),
            "curvature table mismatch for " + family_name(f));
      }
    }
    results.push_back(check);
  }
  {
    CheckResult check{"curvature/characterization-signs"};
    auto sample_nonzero = [&random]() { return random.nonzero(); };
    for (int n = 0; n < opts.sign_samples && check.passed; ++n) {
      const Rational a = sample_nonzero(), b = sample_nonzero();
      // F8: positive scalar curvature; F1/F4/F5/F9/F11: negative.
      const CurvatureData f8 =
          curvature_of(catalog_instantiate(catalog_one(Family::F8, a)));
      verify_detail::expect(check, f8.tau.sign() > 0, "F8 tau should be > 0");
      verify_detail::expect(check, f8.tau_star.is_zero(),
                            "F8 should be *-scalar flat");
      verify_detail::expect(check,
                            f8.k01.sign() > 0 && f8.k02.sign() > 0,
                            "F8 xi-section curvatures should be > 0");
      verify_detail::expect(check, f8.k12.sign() < 0,
                            "F8 phi-section curvature should be < 0");

      const CurvatureData f1 = curvature_of(
          catalog_instantiate(catalog_two(Family::F1, a, b)));
      verify_detail::expect(check, f1.tau.sign() < 0, "F1 tau should be < 0");
      verify_detail::expect(check, f1.tau_star.is_zero(),
                            "F1 should be *-scalar flat");
      verify_detail::expect(check,
                            f1.k01.is_zero() && f1.k02.is_zero(),
                            "F1 xi-section curvatures should vanish");
      verify_detail::expect(check, f1.k12.sign() < 0,
                            "F1 phi-section curvature should be < 0");

      for (const Family f : {Family::F4, Family::F5, Family::F9}) {
        const CurvatureData d =
            curvature_of(catalog_instantiate(catalog_one(f, a)));
        verify_detail::expect(check, d.tau.sign() < 0,
                              family_name(f) + " tau should be < 0");
        verify_detail::expect(check, d.tau_star.is_zero(),
                              family_name(f) + " should be *-scalar flat");
        verify_detail::expect(
            check, d.k01.sign() < 0 && d.k02.sign() < 0,
            family_name(f) + " xi-section curvatures should be < 0");
        const bool positive_phi_section = f != Family::F5;
        verify_detail::expect(check,
                              positive_phi_section ? d.k12.sign() > 0
                                                   : d.k12.sign() < 0,
                              family_name(f) +
                                  " phi-section curvature has wrong sign");
      }

      const CurvatureData f11 = curvature_of(
          catalog_instantiate(catalog_two(Family::F11, a, b)));
      verify_detail::expect(check, f11.tau.sign() < 0,
                            "F11 tau should be < 0");
      verify_detail::expect(check,
                            f11.k01.sign() < 0 && f11.k02.sign() < 0,
                            "F11 xi-section curvatures should be < 0");
      verify_detail::expect(check, f11.k12.is_zero(),
                            "F11 phi-section curvature should vanish");
      verify_detail::expect(check,
                            f11.tau_star == Rational(-2) * a * b,
                            "F11 tau* should equal -2 alpha beta");
      verify_detail::expect(check, f11.tau_star.sign() == -(a * b).sign(),
                            "F11 tau* sign should oppose alpha*beta");
      verify_detail::expect(
          check, f11.rho_star.is_zero() == f11.tau_star.is_zero(),
          "F11 *-Ricci flat should coincide with *-scalar flat");

      // F11 with one vanishing parameter: *-scalar flat iff alpha beta = 0.
      const CurvatureData f11_mixed = curvature_of(
          catalog_instantiate(catalog_two(Family::F11, a, Rational(0))));
      verify_detail::expect(check,
                            f11_mixed.tau_star.is_zero() &&
                                f11_mixed.rho_star.is_zero(),
                            "F11 with beta=0 should be *-flat");
    }
    results.push_back(check);
  }
  {
    CheckResult check{"curvature/f4-f8-f9-shared-form"};
    for (const Family f : {Family::F4, Family::F8, Family::F9})
      for (const Rational& a : opts.grid) {
        const StructureConstants s = catalog_instantiate(catalog_one(f, a));
        const CurvatureData d = curvature_of(s);
        const Mat3 eta_eta =
            make_tensor<2>([&](const std::array<int, 2>& idx) {
              return pack.eta(idx[0]) * pack.eta(idx[1]);
            });
        const Tensor<4> closed_form =
            (d.tau / Rational(4)) * kulkarni_nomizu(pack.g, pack.g) -
            d.tau * kulkarni_nomizu(pack.g, eta_eta);
        verify_detail::expect(check, d.R == closed_form,
                              family_name(f) +
                                  " does not match the shared closed form");
      }
    results.push_back(check);
  }
  {
    CheckResult check{"curvature/f11-phi-degenerate"};
    for (const Rational& a : opts.grid)
      for (const Rational& b : opts.grid) {
        const StructureConstants s =
            catalog_instantiate(catalog_two(Family::F11, a, b));
        const Tensor<4> R = riemann(levi_civita(s), s);
        for (int n = 0; n < Tensor<4>::entry_count && check.passed; ++n) {
          const auto idx = Tensor<4>::unflatten(n);
          Rational sum;
          for (int p = 0; p < kDim; ++p)
            for (int q = 0; q < kDim; ++q)
              sum += pack.phi(idx[2], p) * pack.phi(idx[3], q) *
                     R(idx[0], idx[1], p, q);
          verify_detail::expect(check, sum.is_zero(),
                                "R(x,y,phi z,phi w) != 0 on an F11 manifold");
        }
      }
    results.push_back(check);
  }
  {
    CheckResult check{"curvature/flatness-dichotomy"};
    for (const Family f : all_families()) {
      if (f == Family::Example) continue;
      for (const auto& [entry, s] : catalog_instances(f, opts.grid)) {
        const bool flat = riemann(levi_civita(s), s).is_zero();
        if (f == Family::F10)
          verify_detail::expect(check, flat, "F10 must be flat");
        else
          verify_detail::expect(check, !flat,
                                family_name(f) +
                                    " with nonzero parameters must be "
                                    "non-flat");
      }
    }
    verify_detail::expect(
        check, riemann(levi_civita(abelian_algebra()), abelian_algebra())
                   .is_zero(),
        "abelian algebra must be flat");
    results.push_back(check);
  }
  {
    CheckResult check{"curvature/ricci-and-curvature-form-corollaries"};
    for (const Rational& a : opts.grid) {
      for (const Family f :
           {Family::F1, Family::F4, Family::F5, Family::F8, Family::F9,
            Family::F11}) {
        const StructureConstants s =
            (f == Family::F1 || f == Family::F11)
                ? catalog_instantiate(catalog_two(f, a, a))
                : catalog_instantiate(catalog_one(f, a));
        const ClassDecomposition d = classify(fundamental_tensor(s));
        const CurvatureData c = curvature_of(s);
        const CorollaryResiduals res = curvature_form_check(
            d.membership, c.R, c.rho, c.tau, c.tau_star);
        verify_detail::expect(check,
                              res.ricci_residual.is_zero(),
                              "Ricci corollary residual nonzero for " +
                                  family_name(f));
        verify_detail::expect(check,
                              res.curvature_residual.is_zero(),
                              "curvature corollary residual nonzero for " +
                                  family_name(f));
      }
    }
    results.push_back(check);
  }
  {
    CheckResult check{"curvature/einstein-proposition"};
    for (const Rational& a : opts.grid) {
      const EinsteinVerdict f1 =
          analyze(catalog_instantiate(catalog_two(Family::F1, a, a)))
              .einstein;
      verify_detail::expect(check, f1.kind == EinsteinKind::L1ParaEta,
                            "F1 should be l1-para-eta-Einstein");
      for (const Family f : {Family::F4, Family::F8, Family::F9}) {
        const EinsteinVerdict v =
            analyze(catalog_instantiate(catalog_one(f, a))).einstein;
        verify_detail::expect(check, v.kind == EinsteinKind::L2ParaEta,
                              family_name(f) +
                                  " should be l2-para-eta-Einstein");
      }
      const EinsteinVerdict f5 =
          analyze(catalog_instantiate(catalog_one(Family::F5, a))).einstein;
      verify_detail::expect(check,
                            f5.kind == EinsteinKind::Einstein &&
                                f5.lambda.has_value(),
                            "F5 should be Einstein");
    }
    results.push_back(check);
  }

  // --- special_props ----------------------------------------------------
  {
    CheckResult check{"special/killing-g-theorem"};
    for (const StructureConstants& s : everything) {
      const ClassDecomposition d = classify(fundamental_tensor(s));
      verify_detail::expect(
          check,
          is_killing_metric(s, MetricKind::G).holds ==
              killing_metric_class_condition(d, MetricKind::G),
          "literal Killing-g disagrees with the class condition");
    }
    results.push_back(check);
  }
  {
    CheckResult check{"special/killing-gtilde-theorem"};
    for (const StructureConstants& s : everything) {
      const ClassDecomposition d = classify(fundamental_tensor(s));
      verify_detail::expect(
          check,
          is_killing_metric(s, MetricKind::GTilde).holds ==
              killing_metric_class_condition(d, MetricKind::GTilde),
          "literal Killing-g~ disagrees with the class condition");
    }
    results.push_back(check);
  }
  {
    CheckResult check{"special/killing-xi-theorem"};
    for (const StructureConstants& s : everything) {
      const KillingXiVerdict v = is_killing_xi(s);
      verify_detail::expect(
          check, v.holds == v.class_condition,
          "literal Killing-xi disagrees with the class condition");
    }
    results.push_back(check);
  }
  {
    CheckResult check{"special/abelian-satisfies-all-predicates"};
    const StructureConstants s = abelian_algebra();
    const ClassDecomposition d = classify(fundamental_tensor(s));
    verify_detail::expect(check, d.membership.empty(),
                          "abelian algebra is not F0");
    verify_detail::expect(check,
                          is_killing_metric(s, MetricKind::G).holds &&
                              is_killing_metric(s, MetricKind::GTilde).holds,
                          "abelian metrics are not Killing");
    verify_detail::expect(check, is_biinvariant_phi(s).holds,
                          "abelian phi is not bi-invariant");
    verify_detail::expect(check, is_killing_xi(s).holds,
                          "abelian xi is not Killing");
    verify_detail::expect(check,
                          killing_metric_class_condition(d, MetricKind::G) &&
                              killing_metric_class_condition(
                                  d, MetricKind::GTilde) &&
                              biinvariant_class_condition(d) &&
                              is_killing_xi(s).class_condition,
                          "abelian class conditions do not all hold");
    const GeometryReport r = analyze(s);
    verify_detail::expect(check,
                          r.flat && r.f0 &&
                              r.einstein.kind == EinsteinKind::Einstein &&
                              r.einstein.lambda == Rational(0),
                          "abelian report is not flat F0 Einstein(0)");
    results.push_back(check);
  }
  {
    CheckResult check{"special/biinvariance-comparison"};
    check.informational = true;
    int disagreements = 0;
    std::string example_note;
    for (const StructureConstants& s : everything) {
      const ClassDecomposition d = classify(fundamental_tensor(s));
      const bool literal = is_biinvariant_phi(s).holds;
      const bool condition = biinvariant_class_condition(d);
      if (literal != condition) {
        ++disagreements;
        if (example_note.empty())
          example_note = " (first: class " + class_label(d.membership) +
                         ", literal=" + (literal ? "yes" : "no") +
                         ", condition=" + (condition ? "yes" : "no") + ")";
      }
    }
    check.detail =
        "literal and class-condition verdicts disagree on " +
        std::to_string(disagreements) + " of " +
        std::to_string(everything.size()) + " inputs" + example_note +
        "; both verdicts are reported side by side and not reconciled";
    results.push_back(check);
  }

  return results;
}

}  // namespace apap
