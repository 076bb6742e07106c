#pragma once

#include <cstddef>
#include <vector>

#include "gnewton/partitions.hpp"
#include "gnewton/report.hpp"
#include "gnewton/ring.hpp"

namespace gnewton {

/// Finite ordered stand-in for the variables x_1, x_2, ...
/// All polynomial entries must share one indeterminate.
class VariableSet {
 public:
  VariableSet() = default;
  explicit VariableSet(std::vector<RingElem> values);

  /// Parses a comma-separated list of rationals, e.g. "1/2,-3,4".
  static VariableSet parse(const std::string& text);

  const std::vector<RingElem>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const RingElem& operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<RingElem> values_;
};

/// e_0..e_N, h_0..h_N, p_0..p_N with e_0 = h_0 = 1 and p_0 = 0.
struct BasisTable {
  std::vector<RingElem> e;
  std::vector<RingElem> h;
  std::vector<RingElem> p;
};

// Definitional evaluations (subset / multiset / monomial enumeration).
RingElem elementary_bruteforce(const VariableSet& x, std::size_t k);
RingElem complete_bruteforce(const VariableSet& x, std::size_t k);
RingElem power_sum(const VariableSet& x, std::size_t k);
RingElem monomial_sym(const VariableSet& x, const Partition& lambda);

/// Table filled entirely by the definitional routines above.
BasisTable bruteforce_table(const VariableSet& x, std::size_t max_degree);

/// Fast path: power sums directly, then e and h from the Newton-Girard
/// recurrences n e_n = sum (-1)^(k-1) p_k e_(n-k) and n h_n = sum p_k h_(n-k).
BasisTable basis_table(const VariableSet& x, std::size_t max_degree);

/// e_lambda = prod e_(lambda_i), same for h and p, read from a table.
RingElem elementary_product(const BasisTable& table, const Partition& lambda);
RingElem complete_product(const BasisTable& table, const Partition& lambda);

// Identity checks. The table overloads reuse precomputed brute-force values;
// the table must reach degree n.
VerificationReport verify_newton_e(const BasisTable& brute, std::size_t n);
VerificationReport verify_newton_h(const BasisTable& brute, std::size_t n);
VerificationReport verify_newton_e(const VariableSet& x, std::size_t n);
VerificationReport verify_newton_h(const VariableSet& x, std::size_t n);

/// Both convolution forms for p_n:
///   sum_{k=0}^n (-1)^(k-1) k e_k h_(n-k)   and   sum_{k=0}^n (-1)^(n-k) k h_k e_(n-k).
struct PowerSumConvolutions {
  RingElem via_elementary_first;
  RingElem via_complete_first;
  RingElem power_sum;
};

PowerSumConvolutions power_sum_convolutions(const BasisTable& brute, std::size_t n);
PowerSumConvolutions power_sum_convolutions(const VariableSet& x, std::size_t n);

/// Two reports, one per convolution form, each against p_n.
std::vector<VerificationReport> verify_power_sum_convolution(const BasisTable& brute, std::size_t n);

}  // namespace gnewton
