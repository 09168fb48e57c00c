#include "apap/lie_algebra.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

using namespace apap;

namespace {

Vec3 vec(int a, int b, int c) {
  Vec3 v;
  v(0) = Rational(a);
  v(1) = Rational(b);
  v(2) = Rational(c);
  return v;
}

}  // namespace

TEST(LieAlgebra, F8BasisBracket) {
  const StructureConstants s =
      catalog_instantiate(catalog_one(Family::F8, Rational(1)));
  EXPECT_EQ(bracket(s, basis_vector(1), basis_vector(2)), vec(2, 0, 0));
  EXPECT_EQ(bracket(s, basis_vector(0), basis_vector(1)), vec(0, 0, 1));
  EXPECT_EQ(bracket(s, basis_vector(0), basis_vector(2)), vec(0, -1, 0));
}

TEST(LieAlgebra, BracketOfVectorWithItselfVanishes) {
  const StructureConstants s =
      catalog_instantiate(catalog_two(Family::F1, Rational(2), Rational(-3)));
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int n = 0; n < 50; ++n) {
    const Vec3 x = vec(coeff(rng), coeff(rng), coeff(rng));
    EXPECT_TRUE(bracket(s, x, x).is_zero());
  }
}

TEST(LieAlgebra, ExampleFamilyBracket) {
  const StructureConstants s =
      catalog_instantiate(catalog_two(Family::Example, Rational(2), Rational(3)));
  EXPECT_EQ(bracket(s, basis_vector(0), basis_vector(1)), vec(0, -2, -3));
  EXPECT_EQ(bracket(s, basis_vector(0), basis_vector(2)), vec(0, -3, 2));
  EXPECT_TRUE(bracket(s, basis_vector(1), basis_vector(2)).is_zero());
}

TEST(LieAlgebra, JacobiResidualZeroCases) {
  EXPECT_TRUE(jacobi_residual(abelian_algebra()).is_zero());
  EXPECT_TRUE(
      jacobi_residual(catalog_instantiate(catalog_one(Family::F8, Rational(1))))
          .is_zero());
}

TEST(LieAlgebra, JacobiResidualNonzeroCase) {
  // C_01^0 = 1 and C_12^1 = 1: the cyclic sum collapses to -E0.
  StructureConstants s;
  s.c01(0) = Rational(1);
  s.c12(1) = Rational(1);
  EXPECT_EQ(jacobi_residual(s), vec(-1, 0, 0));
  EXPECT_THROW(require_jacobi(s), std::domain_error);
}

TEST(LieAlgebra, JacobiCompleteWorkedValues) {
  const JacobiSixParams p{Rational(1), Rational(0), Rational(1),
                          Rational(0), Rational(1), Rational(1)};
  const StructureConstants s = jacobi_complete(p);
  EXPECT_EQ(s.c12(0), Rational(1, 2));
  EXPECT_EQ(s.c02(1), Rational(-1));
  EXPECT_EQ(s.c01(2), Rational(1));
  EXPECT_TRUE(jacobi_residual(s).is_zero());
}

TEST(LieAlgebra, JacobiCompleteDegenerateDenominators) {
  const JacobiSixParams all_zero{};
  EXPECT_THROW(jacobi_complete(all_zero), std::domain_error);

  // (0,0,0,0,1,1): C12_0 solves to 0, then C02_1 has denominator 0 - 0.
  const JacobiSixParams p{Rational(0), Rational(0), Rational(0),
                          Rational(0), Rational(1), Rational(1)};
  try {
    jacobi_complete(p);
    FAIL() << "expected a degenerate-denominator error";
  } catch (const std::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("C01_0 - C12_2"), std::string::npos);
  }
}

TEST(LieAlgebra, JacobiSolveLenientCases) {
  // All six zero: every equation is 0 = 0, canonical fill gives abelian.
  const auto abelian = jacobi_solve(JacobiSixParams{});
  ASSERT_TRUE(abelian.has_value());
  EXPECT_EQ(*abelian, abelian_algebra());

  // Zero denominator with nonzero numerator: no Lie algebra exists.
  // C02_1 equation: (C01_0 - C12_2) v = C02_0*C01_1 - C12_1*C02_2 = 1.
  const JacobiSixParams impossible{Rational(0), Rational(1), Rational(0),
                                   Rational(0), Rational(1), Rational(1)};
  EXPECT_FALSE(jacobi_solve(impossible).has_value());
}

TEST(LieAlgebra, CatalogFamilies) {
  const StructureConstants f4 =
      catalog_instantiate(catalog_one(Family::F4, Rational(-1)));
  EXPECT_EQ(bracket(f4, basis_vector(0), basis_vector(1)), vec(0, 0, -1));
  EXPECT_EQ(bracket(f4, basis_vector(0), basis_vector(2)), vec(0, -1, 0));
  EXPECT_TRUE(bracket(f4, basis_vector(1), basis_vector(2)).is_zero());

  EXPECT_EQ(catalog_instantiate(catalog_two(Family::F1, Rational(0), Rational(0))),
            abelian_algebra());

  const StructureConstants ps =
      catalog_instantiate(catalog_two(Family::Example, Rational(0), Rational(1)));
  EXPECT_EQ(bracket(ps, basis_vector(0), basis_vector(1)), vec(0, 0, -1));
  EXPECT_EQ(bracket(ps, basis_vector(0), basis_vector(2)), vec(0, -1, 0));
}

TEST(LieAlgebra, CatalogParameterValidation) {
  EXPECT_THROW(catalog_instantiate(CatalogEntry{Family::F4, {}}),
               std::invalid_argument);
  EXPECT_THROW(catalog_instantiate(CatalogEntry{
                   Family::F4,
                   {{"alpha", Rational(1)}, {"beta", Rational(1)}}}),
               std::invalid_argument);
  EXPECT_THROW(catalog_instantiate(CatalogEntry{
                   Family::Example, {{"alpha", Rational(1)}}}),
               std::invalid_argument);
}

TEST(LieAlgebra, CatalogJacobiOverParameterGrid) {
  const std::vector<Rational> grid = {Rational(-2), Rational(-1, 2),
                                      Rational(0), Rational(1), Rational(3)};
  for (const Family f : all_families())
    for (const auto& [entry, s] : catalog_instances(f, grid))
      EXPECT_TRUE(jacobi_residual(s).is_zero())
          << "family " << family_name(f);
}

TEST(LieAlgebra, BracketBilinearity) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coeff(-4, 4);
  const StructureConstants s = jacobi_complete(
      JacobiSixParams{Rational(1), Rational(0), Rational(1), Rational(0),
                      Rational(1), Rational(1)});
  for (int n = 0; n < 40; ++n) {
    const Vec3 x = vec(coeff(rng), coeff(rng), coeff(rng));
    const Vec3 y = vec(coeff(rng), coeff(rng), coeff(rng));
    const Vec3 z = vec(coeff(rng), coeff(rng), coeff(rng));
    const Rational a(coeff(rng)), b(coeff(rng));
    EXPECT_EQ(bracket(s, a * x + b * y, z),
              a * bracket(s, x, z) + b * bracket(s, y, z));
    EXPECT_EQ(bracket(s, x, y), -bracket(s, y, x));
  }
}
