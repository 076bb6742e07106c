#pragma once

#include <cstddef>
#include <vector>

#include "gnewton/ring.hpp"
#include "gnewton/symfun.hpp"

namespace gnewton {

/// Formal power series in t truncated at a fixed order T: coefficients
/// c_0..c_T. Binary operations require equal orders and throw OrderMismatch
/// otherwise; nothing is ever truncated silently.
class TruncatedSeries {
 public:
  /// Zero series of order T.
  explicit TruncatedSeries(std::size_t order);
  /// Order is coeffs.size() - 1; coeffs must be non-empty.
  explicit TruncatedSeries(std::vector<RingElem> coeffs);

  /// The constant c at order T.
  static TruncatedSeries constant(RingElem c, std::size_t order);
  /// a + b t at order T (b is dropped when T = 0).
  static TruncatedSeries linear(RingElem a, RingElem b, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<RingElem>& coeffs() const { return coeffs_; }
  const RingElem& operator[](std::size_t i) const { return coeffs_.at(i); }

  /// Exact coefficientwise equality; throws OrderMismatch on unequal orders.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  std::vector<RingElem> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// b_0 = a_0^-1, b_n = -a_0^-1 sum_{k=1}^n a_k b_(n-k).
TruncatedSeries series_inverse(const TruncatedSeries& a);
/// a'(t), order T-1. Requires T >= 1.
TruncatedSeries derivative(const TruncatedSeries& a);
/// a'/a at order T-1.
TruncatedSeries log_derivative(const TruncatedSeries& a);
/// (t d/dt) a: c_n -> n c_n.
TruncatedSeries apply_t_ddt(const TruncatedSeries& a);
/// a(-t).
TruncatedSeries negate_t(const TruncatedSeries& a);

/// E(t) = prod (1 + x_i t).
TruncatedSeries build_E(const VariableSet& x, std::size_t order);
/// H(t) = prod (1 - x_i t)^-1, each factor inverted as a series.
TruncatedSeries build_H(const VariableSet& x, std::size_t order);
/// P(t) = sum_i x_i / (1 - x_i t); coefficient k is p_(k+1).
TruncatedSeries build_P(const VariableSet& x, std::size_t order);

}  // namespace gnewton
