#include <gtest/gtest.h>

#include "gnewton/errors.hpp"
#include "gnewton/families.hpp"
#include "test_helpers.hpp"

using namespace gnewton;
using namespace gnewton::testing;

namespace {

void expect_all_equal(const std::vector<VerificationReport>& reports) {
  ASSERT_FALSE(reports.empty());
  for (const auto& r : reports) {
    EXPECT_TRUE(r.equal) << r.identity << " n=" << r.n << " " << to_json(r).dump();
  }
}

std::vector<long> trial_division_primes(long limit) {
  std::vector<long> out;
  for (long n = 2; n <= limit; ++n) {
    bool prime = true;
    for (long d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(n);
  }
  return out;
}

}  // namespace

// --- build_family -------------------------------------------------------------

TEST(BuildFamily, Ones) {
  auto fam = build_family(FamilySpec::parse("ONES", "n=5"));
  EXPECT_EQ(fam.vars.size(), 5U);
  for (const auto& v : fam.vars.values()) EXPECT_EQ(v, RingElem(1L));
}

TEST(BuildFamily, GeometricSymbolic) {
  auto fam = build_family(FamilySpec::parse("GEOMETRIC_Q", "n=3"));
  ASSERT_EQ(fam.vars.size(), 3U);
  EXPECT_EQ(fam.vars[0], RingElem(1L));
  EXPECT_EQ(fam.vars[1], q());
  EXPECT_EQ(fam.vars[2], q() * q());
}

TEST(BuildFamily, GeometricSampled) {
  auto fam = build_family(FamilySpec::parse("GEOMETRIC_Q", "n=3,q=1/2"));
  EXPECT_EQ(fam.vars[2], RingElem(Rational(1, 4)));
}

TEST(BuildFamily, JacobiNodes) {
  auto fam = build_family(FamilySpec::parse("JACOBI_STIRLING", "n=3,gamma=1/2"));
  EXPECT_EQ(fam.vars.values(), vars({1, 4, 9}).values());
  auto symbolic = build_family(FamilySpec::parse("JACOBI_STIRLING", "n=2"));
  EXPECT_EQ(symbolic.vars[0], RingElem(UniPoly("gamma", {Rational(0), Rational(2)})));
}

TEST(BuildFamily, Lengths) {
  EXPECT_EQ(build_family(FamilySpec::parse("ARITH_PROG", "n=4,r=1,m=2")).vars.size(), 5U);
  EXPECT_EQ(build_family(FamilySpec::parse("ZETA_NODES", "s=2,N=7")).vars.size(), 7U);
  EXPECT_EQ(build_family(FamilySpec::parse("PRIME_NODES", "s=1,limit=50")).vars.size(), 15U);
  EXPECT_EQ(build_family(FamilySpec::parse("ARITH_PROG", "n=2,r=1,m=3")).vars.values(), vars({1, 4, 7}).values());
}

TEST(BuildFamily, ValidatesParameters) {
  EXPECT_THROW(FamilySpec::parse("ONES", "n=2,q=3"), InvalidParam);
  EXPECT_THROW(FamilySpec::parse("ZETA_NODES", "s=0,N=3"), InvalidParam);
  EXPECT_THROW(FamilySpec::parse("ZETA_NODES", "s=2"), InvalidParam);
  EXPECT_THROW(FamilySpec::parse("PRIME_NODES", "s=1,limit=1"), InvalidParam);
  EXPECT_THROW(FamilySpec::parse("ONES", "n=-1"), InvalidParam);
  EXPECT_THROW(FamilySpec::parse("CIRCLE", "n=1"), InvalidParam);
  EXPECT_THROW(FamilySpec::parse("ONES", "n=1/2").integer("n"), InvalidParam);
}

TEST(BuildFamily, AllZeroProgressionFlagged) {
  auto fam = build_family(FamilySpec::parse("ARITH_PROG", "n=3,r=0,m=0"));
  EXPECT_EQ(fam.vars.size(), 4U);
  EXPECT_EQ(fam.flags.size(), 1U);
}

TEST(BuildFamily, JsonSpec) {
  auto spec = FamilySpec::from_json(nlohmann::json::parse(R"({"kind":"ARITH_PROG","params":{"n":2,"r":"1/2","m":"3"}})"));
  EXPECT_EQ(spec.rational("r"), Rational(1, 2));
  EXPECT_EQ(spec.to_json()["params"]["n"], "2");
  EXPECT_THROW(FamilySpec::from_json(nlohmann::json::parse(R"({"kind":"ONES","params":{"n":1.5}})")), InvalidParam);
  EXPECT_THROW(FamilySpec::from_json(nlohmann::json::parse(R"({"kind":"ONES","extra":1})")), InvalidParam);
}

// --- binomials ------------------------------------------------------------------

TEST(OnesRow, MatchesPascal) {
  for (long n = 0; n <= 8; ++n) expect_all_equal(verify_ones_row(n, 8));
  // h_k = C(n+k-1, k): two ones, degree two has three monomials.
  auto t = bruteforce_table(vars({1, 1}), 2);
  EXPECT_EQ(t.h[2], RingElem(binomial(3, 2)));
  EXPECT_NE(t.h[2], RingElem(binomial(5, 2)));
}

// --- q-analogues ---------------------------------------------------------------

TEST(QBinomial, SmallValues) {
  EXPECT_EQ(q_binomial(2, 1), qpoly({1, 1}));
  EXPECT_EQ(q_binomial(5, 0), qpoly({1}));
  EXPECT_EQ(q_binomial(4, 2), qpoly({1, 1, 2, 1, 1}));
  EXPECT_THROW(q_binomial(2, 3), DomainError);
}

TEST(QBinomial, SymmetricWithNonnegativeIntegerCoefficients) {
  for (long n = 0; n <= 8; ++n) {
    for (long k = 0; k <= n; ++k) {
      UniPoly g = q_binomial(n, k);
      ASSERT_EQ(g, q_binomial(n, n - k));
      ASSERT_EQ(g.eval(Rational(1)), binomial(n, k));
      for (const auto& c : g.coeffs()) {
        ASSERT_EQ(c.den(), 1);
        ASSERT_GE(c.sign(), 0);
      }
    }
  }
}

TEST(QPochhammer, Product) {
  // (q;q)_2 = (1-q)(1-q^2)
  EXPECT_EQ(q_pochhammer(q(), 2), RingElem(qpoly({1, -1, -1, 1})));
  EXPECT_EQ(q_pochhammer(RingElem(5L), 0), RingElem(1L));
  EXPECT_EQ(q_pochhammer(RingElem(2L), 1), RingElem(-1L));
}

TEST(QRow, Values) {
  VariableSet two({RingElem(1L), q()});
  EXPECT_EQ(elementary_bruteforce(two, 1), RingElem(q_binomial(2, 1)));
  EXPECT_EQ(elementary_bruteforce(two, 2), q());
  VariableSet three({RingElem(1L), q(), q() * q()});
  EXPECT_EQ(complete_bruteforce(three, 2), RingElem(qpoly({1, 1, 2, 1, 1})));
  for (const auto& r : verify_q_row(1, 5)) {
    if (r.identity == "q-row-p") EXPECT_EQ(r.lhs, RingElem(1L));
  }
}

TEST(QRow, ClosedFormsHold) {
  for (long n = 1; n <= 6; ++n) expect_all_equal(verify_q_row(n, 6));
}

// --- Bernoulli and arithmetic progressions ------------------------------------------

TEST(Bernoulli, LowOrders) {
  auto b = bernoulli_polynomials(3);
  EXPECT_EQ(b[0], UniPoly("x", {Rational(1)}));
  EXPECT_EQ(b[1], UniPoly("x", {Rational(-1, 2), Rational(1)}));
  EXPECT_EQ(b[2], UniPoly("x", {Rational(1, 6), Rational(-1), Rational(1)}));
  EXPECT_TRUE(b[3].eval(Rational(1, 2)).is_zero());
}

TEST(Bernoulli, StructuralIdentities) {
  auto b = bernoulli_polynomials(14);
  for (std::size_t n = 1; n <= 14; ++n) {
    ASSERT_EQ(b[n].derivative(), b[n - 1] * Rational(static_cast<long>(n)));
    if (n >= 2) ASSERT_EQ(b[n].eval(Rational(0)), b[n].eval(Rational(1)));
    // B_n(1-x) = (-1)^n B_n(x) at a sample point
    Rational x(2, 7);
    Rational lhs = b[n].eval(Rational(1) - x);
    Rational rhs = b[n].eval(x) * Rational(n % 2 == 0 ? 1 : -1);
    ASSERT_EQ(lhs, rhs);
  }
}

TEST(ArithProg, HandChecked) {
  auto r = verify_arith_prog_power_sum(Rational(1), Rational(3), 2, 1);
  EXPECT_EQ(r.lhs, RingElem(12L));
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(verify_arith_prog_power_sum(Rational(0), Rational(1), 3, 1).rhs, RingElem(6L));
  auto big = verify_arith_prog_power_sum(Rational(2), Rational(5), 4, 3);
  EXPECT_EQ(big.lhs, RingElem(17640L));
  EXPECT_TRUE(big.equal);
  EXPECT_THROW(verify_arith_prog_power_sum(Rational(1), Rational(0), 2, 1), InvalidParam);
}

TEST(ArithProg, RationalGrid) {
  for (auto [r, m] : std::vector<std::pair<Rational, Rational>>{{Rational(1, 2), Rational(1, 3)},
                                                                {Rational(-3, 4), Rational(2, 5)}}) {
    for (long n = 0; n <= 5; ++n) {
      for (long k = 1; k <= 4; ++k) ASSERT_TRUE(verify_arith_prog_power_sum(r, m, n, k).equal);
    }
  }
}

// --- Stirling and Whitney ------------------------------------------------------------

TEST(Stirling, KnownValues) {
  EXPECT_EQ(stirling2(4, 2), Rational(7));
  EXPECT_EQ(stirling2(4, 3), Rational(6));
  EXPECT_EQ(stirling2(5, 5), Rational(1));
  EXPECT_EQ(stirling2(5, 0), Rational(0));
  EXPECT_EQ(stirling1(4, 2), Rational(11));
  EXPECT_EQ(stirling1(4, 3), Rational(-6));
}

TEST(WhitneyStirling, CrossCheck) {
  auto reps = verify_whitney_stirling_crosscheck(2, 2);
  EXPECT_EQ(reps[0].lhs, RingElem(7L));
  expect_all_equal(reps);
  auto n3 = verify_whitney_stirling_crosscheck(3, 1);
  EXPECT_EQ(n3[0].lhs, RingElem(6L));
  for (long n = 1; n <= 5; ++n) {
    expect_all_equal(verify_whitney_stirling_crosscheck(n, 0));
    EXPECT_EQ(verify_whitney_stirling_crosscheck(n, 0)[0].rhs, RingElem(1L));
  }
}

TEST(Whitney, RationalProgressions) {
  expect_all_equal(verify_whitney_row(Rational(1, 2), Rational(1, 3), 4, 4));
  expect_all_equal(verify_whitney_row(Rational(-3, 4), Rational(2, 5), 3, 5));
  EXPECT_EQ(whitney2(RingElem(1L), RingElem(0L), 4, 2), RingElem(7L));
}

// --- Jacobi-Stirling ------------------------------------------------------------------

TEST(JacobiStirling, NodeValues) {
  auto reps = verify_jacobi_stirling_row(2, RingElem(1L), 1);
  expect_all_equal(reps);
  EXPECT_EQ(elementary_bruteforce(build_family(FamilySpec::parse("JACOBI_STIRLING", "n=2,gamma=1")).vars, 1),
            RingElem(8L));
  EXPECT_EQ(elementary_bruteforce(vars({1, 4, 9}), 2), RingElem(49L));
  EXPECT_EQ(jacobi_stirling1(4, 2, RingElem(Rational(1, 2))), RingElem(49L));
}

TEST(JacobiStirling, IndexCorrespondenceIsUnique) {
  // Among nearby shifts of the table indices, exactly the frozen one
  // (e_k -> js(n+1, n+1-k), h_k -> JS(n+k, n)) reproduces the node values.
  std::vector<std::pair<int, int>> e_hits;
  std::vector<std::pair<int, int>> h_hits;
  for (int da = -1; da <= 1; ++da) {
    for (int db = -1; db <= 1; ++db) {
      bool e_ok = true;
      bool h_ok = true;
      for (RingElem gamma : {RingElem(Rational(1, 2)), RingElem(Rational(3, 2)), RingElem(Rational(7, 3))}) {
        for (long n = 1; n <= 4; ++n) {
          std::vector<RingElem> nodes;
          for (long i = 1; i <= n; ++i) nodes.push_back(RingElem(i) * (RingElem(i - 1) + RingElem(2L) * gamma));
          VariableSet x(std::move(nodes));
          for (long k = 0; k <= 3; ++k) {
            if (k <= n && !(elementary_bruteforce(x, static_cast<std::size_t>(k)) ==
                            jacobi_stirling1(n + 1 + da, n + 1 - k + db, gamma))) {
              e_ok = false;
            }
            if (!(complete_bruteforce(x, static_cast<std::size_t>(k)) == jacobi_stirling2(n + k + da, n + db, gamma))) {
              h_ok = false;
            }
          }
        }
      }
      if (e_ok) e_hits.emplace_back(da, db);
      if (h_ok) h_hits.emplace_back(da, db);
    }
  }
  EXPECT_EQ(e_hits, (std::vector<std::pair<int, int>>{{0, 0}}));
  EXPECT_EQ(h_hits, (std::vector<std::pair<int, int>>{{0, 0}}));
}

TEST(JacobiStirling, SymbolicGamma) {
  for (long n = 1; n <= 4; ++n) expect_all_equal(verify_jacobi_stirling_row(n, RingElem::indeterminate("gamma"), 4));
}

// --- zeta -------------------------------------------------------------------------------

TEST(ZetaRow, SmallTruncations) {
  auto x = build_family(FamilySpec::parse("ZETA_NODES", "s=2,N=3")).vars;
  EXPECT_EQ(elementary_bruteforce(x, 1), RingElem(Rational(49, 36)));
  EXPECT_EQ(complete_bruteforce(x, 1), RingElem(Rational(49, 36)));
  EXPECT_EQ(truncated_multiple_zeta(1, 2, 2), Rational(1, 2));
  EXPECT_EQ(truncated_multiple_zeta_star(1, 2, 2), Rational(7, 4));
  auto y = build_family(FamilySpec::parse("ZETA_NODES", "s=1,N=2")).vars;
  EXPECT_EQ(elementary_bruteforce(y, 2), RingElem(Rational(1, 2)));
  EXPECT_EQ(complete_bruteforce(y, 2), RingElem(Rational(7, 4)));
  EXPECT_TRUE(elementary_bruteforce(y, 3).is_zero());
  EXPECT_TRUE(truncated_multiple_zeta(1, 2, 3).is_zero());
}

TEST(ZetaRow, Grid) {
  for (long s = 1; s <= 3; ++s) {
    for (long N = 1; N <= 8; ++N) expect_all_equal(verify_zeta_row(s, N, 5));
  }
}

// --- primes -------------------------------------------------------------------------------

TEST(PrimeSieve, MatchesTrialDivision) {
  for (long limit : {2L, 3L, 10L, 97L, 1000L, 10000L}) EXPECT_EQ(prime_sieve(limit), trial_division_primes(limit));
  EXPECT_TRUE(prime_sieve(1).empty());
}

TEST(PrimeRow, SmallValues) {
  auto x = build_family(FamilySpec::parse("PRIME_NODES", "s=1,limit=5")).vars;
  EXPECT_EQ(elementary_bruteforce(x, 2), RingElem(Rational(1, 3)));
  EXPECT_EQ(squarefree_prime_sum(1, 5, 2), Rational(1, 3));
  auto y = build_family(FamilySpec::parse("PRIME_NODES", "s=2,limit=3")).vars;
  EXPECT_EQ(power_sum(y, 2), RingElem(Rational(97, 1296)));
  EXPECT_EQ(truncated_prime_zeta(4, 3), Rational(97, 1296));
  auto z = build_family(FamilySpec::parse("PRIME_NODES", "s=1,limit=10")).vars;
  EXPECT_EQ(elementary_bruteforce(z, 2), RingElem(Rational(101, 210)));
}

TEST(PrimeRow, FirstDegreeCoincides) {
  auto x = build_family(FamilySpec::parse("PRIME_NODES", "s=3,limit=20")).vars;
  RingElem p = RingElem(truncated_prime_zeta(3, 20));
  EXPECT_EQ(elementary_bruteforce(x, 1), p);
  EXPECT_EQ(complete_bruteforce(x, 1), p);
  EXPECT_EQ(power_sum(x, 1), p);
}

TEST(PrimeRow, FrozenLimitFifty) {
  // Independent script over the 15 primes <= 50 with s = 2.
  auto x = build_family(FamilySpec::parse("PRIME_NODES", "s=2,limit=50")).vars;
  EXPECT_EQ(elementary_bruteforce(x, 3).to_string(),
            "1305357206109178118668480146922219/378089444731722233953867379643788100");
  EXPECT_EQ(prime_multiset_sum(2, 50, 3).to_string(),
            "2052420520799778578564035065668296283876800989876556798208964246536350820419002691283941252642441041117049/"
            "54048501736266066351581053330601452466871077356830280449394897010622925384777126134042427405765868841000000");
}

TEST(PrimeRow, Grid) {
  for (long s : {1L, 2L}) expect_all_equal(verify_prime_row(s, 50, 3));
  EXPECT_THROW(verify_prime_row(1, 1, 2), InvalidParam);
}

TEST(PrimeRow, CompleteSumCountsRepeatedFactors) {
  // h_2 over {1/2, 1/3} includes 1/4 and 1/9: n = 4 has one distinct prime factor.
  EXPECT_EQ(prime_multiset_sum(1, 3, 2), Rational(1, 4) + Rational(1, 6) + Rational(1, 9));
}

// --- generic identities on family sets -------------------------------------------------------

TEST(Families, GenericIdentitiesHold) {
  for (const char* spec : {"ONES:n=4", "GEOMETRIC_Q:n=3", "ARITH_PROG:n=3,r=1/2,m=2", "JACOBI_STIRLING:n=3,gamma=7/3",
                           "ZETA_NODES:s=2,N=4", "PRIME_NODES:s=1,limit=11"}) {
    std::string text(spec);
    auto colon = text.find(':');
    auto fam = build_family(FamilySpec::parse(text.substr(0, colon), text.substr(colon + 1)));
    auto brute = bruteforce_table(fam.vars, 5);
    for (std::size_t n = 1; n <= 5; ++n) {
      ASSERT_TRUE(verify_newton_e(brute, n).equal) << spec;
      ASSERT_TRUE(verify_newton_h(brute, n).equal) << spec;
      for (const auto& r : verify_power_sum_convolution(brute, n)) ASSERT_TRUE(r.equal) << spec;
    }
  }
}

TEST(RowOracle, MatchesBruteForce) {
  for (const char* spec : {"ONES:n=5", "GEOMETRIC_Q:n=3", "GEOMETRIC_Q:n=3,q=2/3", "ARITH_PROG:n=3,r=1/2,m=2",
                           "ARITH_PROG:n=2,r=0,m=0", "JACOBI_STIRLING:n=3,gamma=1/2", "JACOBI_STIRLING:n=2",
                           "ZETA_NODES:s=1,N=3", "PRIME_NODES:s=1,limit=10"}) {
    std::string text(spec);
    auto colon = text.find(':');
    auto fs = FamilySpec::parse(text.substr(0, colon), text.substr(colon + 1));
    auto brute = bruteforce_table(build_family(fs).vars, 4);
    for (long k = 0; k <= 4; ++k) {
      auto o = row_oracle(fs, k);
      auto idx = static_cast<std::size_t>(k);
      ASSERT_TRUE(o.e && o.h) << spec;
      ASSERT_EQ(*o.e, brute.e[idx]) << spec << " k=" << k;
      ASSERT_EQ(*o.h, brute.h[idx]) << spec << " k=" << k;
      if (o.p) ASSERT_EQ(*o.p, brute.p[idx]) << spec << " k=" << k;
    }
  }
}
