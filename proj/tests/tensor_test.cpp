#include "apap/tensor.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "apap/curvature.hpp"
#include "apap/lie_algebra.hpp"

using namespace apap;

namespace {

template <int Rank>
Tensor<Rank> random_tensor(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  Tensor<Rank> t;
  for (int n = 0; n < Tensor<Rank>::entry_count; ++n)
    t.entry(n) = Rational(num(rng), den(rng));
  return t;
}

}  // namespace

TEST(Tensor, ZeroInitializedAndIndexed) {
  Tensor<3> t;
  EXPECT_TRUE(t.is_zero());
  t(1, 2, 0) = Rational(5);
  EXPECT_EQ(t(1, 2, 0), Rational(5));
  EXPECT_EQ(t.at({1, 2, 0}), Rational(5));
  EXPECT_THROW(t(3, 0, 0), std::out_of_range);
}

TEST(Tensor, TraceOfIdentityIsDimension) {
  Mat3 identity;
  for (int i = 0; i < kDim; ++i) identity(i, i) = Rational(1);
  EXPECT_EQ(metric_contract(identity, 0, 1).value(), Rational(3));
}

TEST(Tensor, InvalidContractionSlots) {
  const Tensor<4> t;
  EXPECT_THROW(metric_contract(t, 1, 1), std::invalid_argument);
  EXPECT_THROW(metric_contract(t, 0, 4), std::invalid_argument);
  EXPECT_THROW(metric_contract(t, -1, 2), std::invalid_argument);
}

TEST(Tensor, RicciAndScalarOfF5Catalog) {
  // Contractions of the F5 (alpha=1) curvature tensor.
  const StructureConstants s =
      catalog_instantiate(catalog_one(Family::F5, Rational(1)));
  const Tensor<4> R = riemann(levi_civita(s), s);
  const Mat3 rho = metric_contract(R, 0, 3);
  for (int i = 0; i < kDim; ++i) EXPECT_EQ(rho(i, i), Rational(-2));
  EXPECT_EQ(metric_contract(rho, 0, 1).value(), Rational(-6));
}

TEST(Tensor, ContractionCommutesWithScalarMultiplication) {
  std::mt19937 rng(77);
  for (int n = 0; n < 30; ++n) {
    const auto t = random_tensor<4>(rng);
    const Rational c(rng() % 17 - 8, rng() % 5 + 1);
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        EXPECT_EQ(metric_contract(c * t, a, b), c * metric_contract(t, a, b));
  }
}

TEST(Tensor, DoubleContractionMatchesOnePass) {
  std::mt19937 rng(78);
  for (int n = 0; n < 30; ++n) {
    const auto t = random_tensor<4>(rng);
    const Rational two_step =
        metric_contract(metric_contract(t, 0, 3), 0, 1).value();
    Rational one_pass;
    for (int i = 0; i < kDim; ++i)
      for (int a = 0; a < kDim; ++a) one_pass += t(i, a, a, i);
    EXPECT_EQ(two_step, one_pass);
  }
}

TEST(Tensor, ContractionSlotOrderIrrelevant) {
  std::mt19937 rng(79);
  const auto t = random_tensor<4>(rng);
  EXPECT_EQ(metric_contract(t, 0, 3), metric_contract(t, 3, 0));
}

TEST(Tensor, MultilinearEvaluation) {
  Mat3 m;
  m(1, 2) = Rational(4);
  Vec3 x, y;
  x(1) = Rational(1, 2);
  y(2) = Rational(3);
  EXPECT_EQ(eval(m, x, y), Rational(6));
}

TEST(Tensor, DescribePrintsNonzeroEntries) {
  Tensor<2> t;
  EXPECT_EQ(t.describe(), "0");
  t(0, 2) = Rational(-1, 2);
  EXPECT_EQ(t.describe(), "T[0][2]=-1/2");
}
