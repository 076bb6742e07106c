#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gnewton/report.hpp"
#include "gnewton/symfun.hpp"

namespace gnewton {

// ---------------------------------------------------------------------------
// Family specifications
// ---------------------------------------------------------------------------

enum class FamilyKind { Ones, GeometricQ, ArithProg, JacobiStirling, ZetaNodes, PrimeNodes };

/// "ONES", "GEOMETRIC_Q", "ARITH_PROG", "JACOBI_STIRLING", "ZETA_NODES", "PRIME_NODES".
std::string to_string(FamilyKind kind);
FamilyKind parse_family_kind(const std::string& text);

/// A family kind with its parameters, kept as the exact strings supplied.
///
///   ONES             n
///   GEOMETRIC_Q      n, q (optional rational; symbolic q when absent)
///   ARITH_PROG       n, r, m
///   JACOBI_STIRLING  n, gamma (optional rational; symbolic gamma when absent)
///   ZETA_NODES       s, N
///   PRIME_NODES      s, limit
///
/// Unknown or missing parameters are rejected with InvalidParam.
class FamilySpec {
 public:
  FamilySpec(FamilyKind kind, std::map<std::string, std::string> params);

  /// {"kind": "...", "params": {...}}; values may be strings or integers.
  static FamilySpec from_json(const nlohmann::json& j);
  /// "n=3,q=1/2" style parameter list.
  static FamilySpec parse(const std::string& kind, const std::string& params);

  FamilyKind kind() const { return kind_; }
  const std::map<std::string, std::string>& params() const { return params_; }
  bool has(const std::string& name) const { return params_.count(name) != 0; }
  long integer(const std::string& name) const;
  Rational rational(const std::string& name) const;

  /// Copy with one parameter replaced.
  FamilySpec with(const std::string& name, const std::string& value) const;

  nlohmann::json to_json() const;

 private:
  void validate() const;

  FamilyKind kind_;
  std::map<std::string, std::string> params_;
};

struct Family {
  FamilySpec spec;
  VariableSet vars;
  /// Non-fatal remarks, e.g. an all-zero progression.
  std::vector<std::string> flags;
};

/// ONES -> n ones; GEOMETRIC_Q -> {1, q, ..., q^(n-1)}; ARITH_PROG ->
/// {r, r+m, ..., r+nm} (n+1 values); JACOBI_STIRLING -> {i(i-1+2 gamma)},
/// i = 1..n; ZETA_NODES -> {1/i^s}, i = 1..N; PRIME_NODES -> {1/l^s} over
/// primes l <= limit.
Family build_family(const FamilySpec& spec);

// ---------------------------------------------------------------------------
// q-analogues
// ---------------------------------------------------------------------------

/// (a; q)_n = prod_{j=0}^{n-1} (1 - a q^j), a polynomial in `var`.
RingElem q_pochhammer(const RingElem& a, long n, const std::string& var = "q");
/// Gaussian binomial (q;q)_n / ((q;q)_k (q;q)_(n-k)) by exact polynomial
/// division. DomainError unless 0 <= k <= n.
UniPoly q_binomial(long n, long k, const std::string& var = "q");

/// e_k(1..q^(n-1)) = q^C(k,2) [n,k]_q, h_k = [n+k-1,k]_q and
/// p_k = (1 - q^(nk)) / (1 - q^k), all as exact polynomial identities.
std::vector<VerificationReport> verify_q_row(long n, long max_k);

// ---------------------------------------------------------------------------
// Binomials
// ---------------------------------------------------------------------------

/// Rows 0..max_n of Pascal's triangle from C(a,b) = C(a-1,b-1) + C(a-1,b).
std::vector<std::vector<Rational>> pascal_triangle(long max_n);

/// e_k = C(n,k), h_k = C(n+k-1,k), p_k = n on n ones, k <= max_k.
std::vector<VerificationReport> verify_ones_row(long n, long max_k);

// ---------------------------------------------------------------------------
// Arithmetic progressions, Bernoulli polynomials, Whitney and Stirling numbers
// ---------------------------------------------------------------------------

/// B_0(x)..B_K(x) in the indeterminate "x".
struct BernoulliCache {
  std::vector<UniPoly> polys;
  const UniPoly& operator[](std::size_t n) const { return polys.at(n); }
};

/// B_n(x) = x^n - sum_{j<n} C(n,j) B_j(x) / (n-j+1).
BernoulliCache bernoulli_polynomials(std::size_t max_n);

/// m^k/(k+1) * (B_(k+1)(n+1+r/m) - B_(k+1)(r/m)). InvalidParam when m = 0.
Rational arith_prog_power_sum_closed(const Rational& r, const Rational& m, long n, long k);

/// Direct sum_{j=0}^n (r+jm)^k against the Bernoulli closed form.
VerificationReport verify_arith_prog_power_sum(const Rational& r, const Rational& m, long n, long k);

/// Stirling numbers of the second kind, S(a,b) = b S(a-1,b) + S(a-1,b-1).
Rational stirling2(long a, long b);
/// Signed Stirling numbers of the first kind, s(a,b) = s(a-1,b-1) - (a-1) s(a-1,b).
Rational stirling1(long a, long b);

/// r-Whitney numbers of the second kind: W(a,b) = W(a-1,b-1) + (r + b m) W(a-1,b).
RingElem whitney2(const RingElem& m, const RingElem& r, long a, long b);
/// Signed r-Whitney numbers of the first kind:
/// w(a,b) = w(a-1,b-1) - (r + (a-1) m) w(a-1,b).
RingElem whitney1(const RingElem& m, const RingElem& r, long a, long b);

/// At (m, r) = (1, 0): h_k(0..n) = S(n+k, n) and e_k(0..n) = (-1)^k s(n+1, n+1-k).
std::vector<VerificationReport> verify_whitney_stirling_crosscheck(long n, long k);

/// General progression: h_k(r..r+nm) = W(n+k, n), e_k = (-1)^k w(n+1, n+1-k).
std::vector<VerificationReport> verify_whitney_row(const Rational& r, const Rational& m, long n, long max_k);

// ---------------------------------------------------------------------------
// Jacobi-Stirling numbers
// ---------------------------------------------------------------------------

/// Second kind: JS(a,b) = JS(a-1,b-1) + b(b-1+2 gamma) JS(a-1,b), JS(0,0) = 1.
RingElem jacobi_stirling2(long a, long b, const RingElem& gamma);
/// Unsigned first kind: js(a,b) = js(a-1,b-1) + (a-1)(a-2+2 gamma) js(a-1,b).
RingElem jacobi_stirling1(long a, long b, const RingElem& gamma);

/// On the nodes i(i-1+2 gamma), i = 1..n:
///   e_k = js(n+1, n+1-k)  for k <= min(max_k, n)
///   h_k = JS(n+k, n)      for k <= max_k
/// gamma may be a rational or a polynomial (symbolic gamma).
std::vector<VerificationReport> verify_jacobi_stirling_row(long n, const RingElem& gamma, long max_k);

// ---------------------------------------------------------------------------
// Truncated zeta values
// ---------------------------------------------------------------------------

/// sum over n_1 > ... > n_k >= 1 with n_1 <= N of 1/(n_1 ... n_k)^s.
Rational truncated_multiple_zeta(long s, long N, long k);
/// Same over weak chains n_1 >= ... >= n_k >= 1.
Rational truncated_multiple_zeta_star(long s, long N, long k);
/// sum_{i <= N} 1/i^s.
Rational truncated_zeta(long s, long N);

std::vector<VerificationReport> verify_zeta_row(long s, long N, long max_k);

// ---------------------------------------------------------------------------
// Primes
// ---------------------------------------------------------------------------

/// Primes <= limit by the sieve of Eratosthenes.
std::vector<long> prime_sieve(long limit);

/// sum of mu(n)^2 / n^s over n with all prime factors <= limit and omega(n) = k,
/// by factoring every integer up to the largest admissible n.
Rational squarefree_prime_sum(long s, long limit, long k);
/// sum of 1/n^s over n with all prime factors <= limit and Omega(n) = k
/// (k prime factors counted with multiplicity), by the same enumeration.
Rational prime_multiset_sum(long s, long limit, long k);
/// sum over primes l <= limit of 1/l^s, primes found by trial division.
Rational truncated_prime_zeta(long s, long limit);

std::vector<VerificationReport> verify_prime_row(long s, long limit, long max_k);

// ---------------------------------------------------------------------------
// Row oracles
// ---------------------------------------------------------------------------

/// Closed-form or recurrence values for e_k, h_k, p_k on a family, where the
/// family has one (p_k on Jacobi-Stirling nodes has none).
struct RowOracle {
  std::optional<RingElem> e;
  std::optional<RingElem> h;
  std::optional<RingElem> p;
};

RowOracle row_oracle(const FamilySpec& spec, long k);

}  // namespace gnewton
