#include "gnewton/series.hpp"

#include <string>

#include "gnewton/errors.hpp"

namespace gnewton {

namespace {

void check_orders(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw OrderMismatch("series orders differ: " + std::to_string(a.order()) + " vs " + std::to_string(b.order()));
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, RingElem(0L)) {}

TruncatedSeries::TruncatedSeries(std::vector<RingElem> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidParam("a truncated series needs at least the constant coefficient");
}

TruncatedSeries TruncatedSeries::constant(RingElem c, std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = std::move(c);
  return s;
}

TruncatedSeries TruncatedSeries::linear(RingElem a, RingElem b, std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = std::move(a);
  if (order >= 1) s.coeffs_[1] = std::move(b);
  return s;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_orders(a, b);
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
  }
  return true;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_orders(a, b);
  std::vector<RingElem> out(a.coeffs());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_orders(a, b);
  const std::size_t order = a.order();
  std::vector<RingElem> out(order + 1, RingElem(0L));
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_inverse(const TruncatedSeries& a) {
  RingElem inv0 = a[0].inverse();
  std::vector<RingElem> out;
  out.reserve(a.order() + 1);
  out.push_back(inv0);
  for (std::size_t n = 1; n <= a.order(); ++n) {
    RingElem acc(0L);
    for (std::size_t k = 1; k <= n; ++k) acc += a[k] * out[n - k];
    out.push_back(-(inv0 * acc));
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries derivative(const TruncatedSeries& a) {
  if (a.order() == 0) throw DomainError("derivative of an order-0 series has no coefficients");
  std::vector<RingElem> out;
  for (std::size_t k = 1; k <= a.order(); ++k) out.push_back(a[k] * RingElem(static_cast<long>(k)));
  return TruncatedSeries(std::move(out));
}

TruncatedSeries log_derivative(const TruncatedSeries& a) {
  if (a[0].constant_value().value_or(Rational(0)).is_zero()) {
    throw NonInvertibleConstantTerm("log derivative needs an invertible constant term, got " + a[0].to_string());
  }
  TruncatedSeries d = derivative(a);
  std::vector<RingElem> head(a.coeffs().begin(), a.coeffs().end() - 1);
  return series_mul(d, series_inverse(TruncatedSeries(std::move(head))));
}

TruncatedSeries apply_t_ddt(const TruncatedSeries& a) {
  std::vector<RingElem> out(a.coeffs());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] *= RingElem(static_cast<long>(k));
  return TruncatedSeries(std::move(out));
}

TruncatedSeries negate_t(const TruncatedSeries& a) {
  std::vector<RingElem> out(a.coeffs());
  for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries build_E(const VariableSet& x, std::size_t order) {
  auto acc = TruncatedSeries::constant(RingElem(1L), order);
  for (const auto& xi : x.values()) acc = series_mul(acc, TruncatedSeries::linear(RingElem(1L), xi, order));
  return acc;
}

TruncatedSeries build_H(const VariableSet& x, std::size_t order) {
  auto acc = TruncatedSeries::constant(RingElem(1L), order);
  for (const auto& xi : x.values()) {
    acc = series_mul(acc, series_inverse(TruncatedSeries::linear(RingElem(1L), -xi, order)));
  }
  return acc;
}

TruncatedSeries build_P(const VariableSet& x, std::size_t order) {
  TruncatedSeries acc(order);
  for (const auto& xi : x.values()) {
    // x_i / (1 - x_i t) = sum_k x_i^(k+1) t^k
    std::vector<RingElem> geom;
    RingElem power = xi;
    for (std::size_t k = 0; k <= order; ++k) {
      geom.push_back(power);
      power *= xi;
    }
    acc = series_add(acc, TruncatedSeries(std::move(geom)));
  }
  return acc;
}

}  // namespace gnewton
