#include <gtest/gtest.h>

#include "gnewton/errors.hpp"
#include "gnewton/twovar.hpp"
#include "test_helpers.hpp"

using namespace gnewton;
using namespace gnewton::testing;

namespace {
constexpr auto HM = PairBasis::CompleteMonomial;
constexpr auto EM = PairBasis::ElementaryMonomial;
}  // namespace

TEST(PairCoefficient, DegreeZero) {
  EXPECT_EQ(pair_coefficient(vars({2, 5}), vars({3}), 0, HM).value, RingElem(1L));
  EXPECT_EQ(pair_coefficient(vars({2, 5}), vars({3}), 0, EM).value, RingElem(1L));
}

TEST(PairCoefficient, DegreeOneIsProductOfSums) {
  EXPECT_EQ(pair_coefficient(vars({2}), vars({3}), 1, HM).value, RingElem(6L));
  EXPECT_EQ(pair_coefficient(vars({2, 1}), vars({3, -1}), 1, EM).value, RingElem(6L));
}

TEST(PairCoefficient, SingleVariables) {
  EXPECT_EQ(pair_coefficient(vars({2}), vars({3}), 2, HM).value, RingElem(36L));
}

TEST(PairCoefficient, FrozenValues) {
  // Partition-sum values computed by an independent script for X = {1,2}, Y = {1,3}.
  const std::vector<long> hm{1, 12, 97, 672};
  const std::vector<long> em{1, 12, 47, 72};
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(pair_coefficient(vars({1, 2}), vars({1, 3}), k, HM).value, RingElem(hm[k]));
    EXPECT_EQ(pair_coefficient(vars({1, 2}), vars({1, 3}), k, EM).value, RingElem(em[k]));
  }
}

TEST(PairProduct, SingleFactor) {
  EXPECT_EQ(pair_coefficient_via_product(vars({2}), vars({3}), 3, HM).value, RingElem(216L));
  EXPECT_TRUE(pair_coefficient_via_product(vars({2}), vars({3}), 2, EM).value.is_zero());
  EXPECT_EQ(pair_coefficient_via_product(vars({1, 1}), vars({1, 1}), 2, HM).value, RingElem(10L));
}

TEST(PairProduct, AgreesWithPartitionSum) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    VariableSet x = random_set(rng, 1, 4);
    VariableSet y = random_set(rng, 1, 4);
    for (auto basis : {HM, EM}) {
      auto series = pair_product_series(x, y, 6, basis);
      for (std::size_t k = 0; k <= 6; ++k) {
        ASSERT_EQ(pair_coefficient(x, y, k, basis).value, series[k]);
        ASSERT_TRUE(verify_pair_symmetry(x, y, k, basis).equal);
      }
    }
  }
}

TEST(PairProduct, ElementaryKernelIsPolynomial) {
  VariableSet x = vars({2, -1});
  VariableSet y = vars("1/2,3");
  for (std::size_t k = 5; k <= 7; ++k) EXPECT_TRUE(pair_coefficient(x, y, k, EM).value.is_zero());
  EXPECT_FALSE(pair_coefficient(x, y, 4, EM).value.is_zero());
}

TEST(PairSymmetry, Cases) {
  auto r = verify_pair_symmetry(vars({2}), vars({3, 5}), 2, HM);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.lhs, RingElem(196L));
  EXPECT_EQ(r.extra["basis"], "H_M");
  EXPECT_EQ(r.extra["kx_size"], 1);
  EXPECT_EQ(r.extra["ky_size"], 2);
  EXPECT_TRUE(verify_pair_symmetry(vars({7, 1}), vars({3}), 0, EM).equal);
  EXPECT_TRUE(verify_pair_symmetry(vars({4, 1}), vars({4, 1}), 3, EM).equal);
}

TEST(GeneralizedNewton, SingleVariableCollapse) {
  auto r = verify_generalized_newton(vars({2}), vars({3}), 3, HM);
  EXPECT_EQ(r.lhs, RingElem(648L));
  EXPECT_EQ(r.rhs, RingElem(648L));
  EXPECT_TRUE(verify_generalized_newton(vars({2}), vars({3}), 3, EM).equal);
}

TEST(GeneralizedNewton, DegreeOne) {
  auto r = verify_generalized_newton(vars({2, 5}), vars({3, -1}), 1, HM);
  EXPECT_EQ(r.lhs, RingElem(14L));
  EXPECT_TRUE(r.equal);
}

TEST(GeneralizedNewton, HandSizedSets) {
  auto h = verify_generalized_newton(vars({1, 2}), vars({1, 3}), 3, HM);
  EXPECT_EQ(h.lhs, RingElem(2016L));
  EXPECT_TRUE(h.equal);
  auto e = verify_generalized_newton(vars({1, 2}), vars({1, 3}), 3, EM);
  EXPECT_EQ(e.lhs, RingElem(216L));
  EXPECT_TRUE(e.equal);
}

TEST(GeneralizedNewton, AlternateSignIsNegated) {
  // With (-1)^(n-k) on the elementary kernel the right side comes out as the
  // negative of n C_n; already visible for one variable in each set.
  auto r = generalized_newton_alternate_sign(vars({2}), vars({3}), 1);
  EXPECT_EQ(r.lhs, RingElem(6L));
  EXPECT_EQ(r.rhs, RingElem(-6L));
  EXPECT_FALSE(r.equal);
  auto big = generalized_newton_alternate_sign(vars({1, 2}), vars({1, 3}), 3);
  EXPECT_EQ(big.rhs, -big.lhs);
}

TEST(GeneralizedNewton, RandomPairs) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    VariableSet x = random_set(rng, 1, 4);
    VariableSet y = random_set(rng, 1, 4);
    for (auto basis : {HM, EM}) {
      for (std::size_t n = 1; n <= 6; ++n) ASSERT_TRUE(verify_generalized_newton(x, y, n, basis).equal);
    }
  }
}

TEST(GeneralizedNewton, RejectsDegreeZero) {
  EXPECT_THROW(verify_generalized_newton(vars({1}), vars({1}), 0, HM), InvalidParam);
}

TEST(Specialization, OnesComplete) {
  auto reps = specialize_to_classical(vars({1, 1, 1}), 2, HM);
  for (const auto& r : reps) EXPECT_TRUE(r.equal) << r.identity;
  const auto& two_set = reps[3];
  EXPECT_EQ(two_set.identity, "generalized-newton");
  EXPECT_EQ(two_set.lhs, RingElem(12L));
}

TEST(Specialization, Elementary) {
  auto reps = specialize_to_classical(vars({2, 3}), 2, EM);
  for (const auto& r : reps) EXPECT_TRUE(r.equal) << r.identity;
  EXPECT_EQ(reps[3].lhs, RingElem(12L));
  EXPECT_EQ(reps[3].rhs, RingElem(12L));
}

TEST(PairBasisNames, RoundTrip) {
  EXPECT_EQ(parse_pair_basis("h_m"), HM);
  EXPECT_EQ(parse_pair_basis(to_string(EM)), EM);
  EXPECT_THROW(parse_pair_basis("schur"), InvalidParam);
}
