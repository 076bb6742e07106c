#include <gtest/gtest.h>

#include "gnewton/errors.hpp"
#include "gnewton/series.hpp"
#include "test_helpers.hpp"

using namespace gnewton;
using namespace gnewton::testing;

namespace {

TruncatedSeries ints(std::vector<long> cs) {
  std::vector<RingElem> v(cs.begin(), cs.end());
  return TruncatedSeries(std::move(v));
}

}  // namespace

TEST(SeriesMul, DifferenceOfSquares) { EXPECT_EQ(series_mul(ints({1, 1, 0}), ints({1, -1, 0})), ints({1, 0, -1})); }

TEST(SeriesMul, Identity) {
  auto a = ints({3, -1, 4, 1});
  EXPECT_EQ(series_mul(a, TruncatedSeries::constant(RingElem(1L), 3)), a);
}

TEST(SeriesMul, OrderMismatchIsAnError) {
  EXPECT_THROW(series_mul(ints({1, 1}), ints({1, 1, 1})), OrderMismatch);
  EXPECT_THROW((void)(ints({1, 1}) == ints({1, 1, 0})), OrderMismatch);
}

TEST(SeriesInverse, Geometric) {
  EXPECT_EQ(series_inverse(ints({1, -1, 0, 0})), ints({1, 1, 1, 1}));
  EXPECT_EQ(series_inverse(ints({1})), ints({1}));
}

TEST(SeriesInverse, NeedsUnitConstant) {
  EXPECT_THROW(series_inverse(ints({0, 1, 1})), NonInvertibleConstantTerm);
  TruncatedSeries poly_const({q(), RingElem(1L)});
  EXPECT_THROW(series_inverse(poly_const), NonInvertibleConstantTerm);
}

TEST(SeriesInverse, EOfMinusTGivesH) {
  VariableSet x = vars({2, 3});
  auto h = series_inverse(negate_t(build_E(x, 4)));
  for (std::size_t k = 0; k <= 4; ++k) EXPECT_EQ(h[k], complete_bruteforce(x, k));
}

TEST(LogDerivative, SingleVariableOne) {
  auto p = log_derivative(build_H(vars({1}), 5));
  EXPECT_EQ(p.order(), 4U);
  for (std::size_t k = 0; k <= 4; ++k) EXPECT_EQ(p[k], RingElem(1L));
}

TEST(LogDerivative, OfOneIsZero) {
  auto z = log_derivative(TruncatedSeries::constant(RingElem(1L), 3));
  EXPECT_EQ(z, TruncatedSeries(2));
}

TEST(LogDerivative, PowerSums) {
  auto p = log_derivative(build_H(vars({2, 3}), 6));
  for (std::size_t k = 0; k <= 5; ++k) {
    long expected = (1L << (k + 1));
    long three = 1;
    for (std::size_t i = 0; i <= k; ++i) three *= 3;
    EXPECT_EQ(p[k], RingElem(expected + three)) << k;
  }
}

TEST(LogDerivative, Errors) {
  EXPECT_THROW(log_derivative(ints({0, 1, 2})), NonInvertibleConstantTerm);
  EXPECT_THROW(log_derivative(ints({1})), DomainError);
}

TEST(Builders, TwoFactorE) {
  VariableSet x({RingElem(Rational(1, 2)), RingElem(-3L)});
  auto e = build_E(x, 2);
  EXPECT_EQ(e[1], RingElem(Rational(-5, 2)));
  EXPECT_EQ(e[2], RingElem(Rational(-3, 2)));
}

TEST(Builders, GeometricH) { EXPECT_EQ(build_H(vars({1}), 3), ints({1, 1, 1, 1})); }

TEST(Builders, PowerSumSeries) { EXPECT_EQ(build_P(vars({1, 1}), 3), ints({2, 2, 2, 2})); }

TEST(Builders, PolynomialCoefficients) {
  VariableSet x({RingElem(1L), q()});
  auto h = build_H(x, 3);
  EXPECT_EQ(h[2], RingElem(qpoly({1, 1, 1})));
  EXPECT_EQ(h[3], RingElem(qpoly({1, 1, 1, 1})));
}

TEST(TDdt, Basic) {
  EXPECT_EQ(apply_t_ddt(ints({1, 1, 1})), ints({0, 1, 2}));
  EXPECT_EQ(apply_t_ddt(ints({1})), ints({0}));
  EXPECT_EQ(apply_t_ddt(build_E(vars({2, 3}), 3))[2], RingElem(12L));
}

TEST(SeriesProperties, RandomSets) {
  std::mt19937_64 rng(555);
  const std::size_t order = 12;
  for (int trial = 0; trial < 30; ++trial) {
    VariableSet x = random_set(rng, 0, 5);
    auto e = build_E(x, order);
    auto h = build_H(x, order);
    ASSERT_EQ(series_mul(h, negate_t(e)), TruncatedSeries::constant(RingElem(1L), order));
    ASSERT_EQ(log_derivative(h), build_P(x, order - 1));
    auto conv = series_mul(apply_t_ddt(h), negate_t(e));
    auto brute = bruteforce_table(x, order);
    for (std::size_t k = 0; k <= order; ++k) {
      ASSERT_EQ(conv[k], brute.p[k]);
      ASSERT_EQ(e[k], brute.e[k]);
      ASSERT_EQ(h[k], brute.h[k]);
    }
  }
}
