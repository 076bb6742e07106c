#include "gnewton/twovar.hpp"

#include <algorithm>
#include <cctype>

#include "gnewton/errors.hpp"

namespace gnewton {

namespace {

nlohmann::json pair_extra(const VariableSet& x, const VariableSet& y, PairBasis basis) {
  return {{"basis", to_string(basis)}, {"kx_size", x.size()}, {"ky_size", y.size()}};
}

// Sum of s(n-k) * p_(n-k)(x) p_(n-k)(y) * C_k over k = 0..n, where s(j) is the
// sign applied to the j-th power-sum product.
template <typename SignFn>
RingElem newton_rhs(const VariableSet& x, const VariableSet& y, std::size_t n, PairBasis basis, SignFn sign) {
  RingElem rhs(0L);
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t j = n - k;
    RingElem term = power_sum(x, j) * power_sum(y, j) * pair_coefficient(x, y, k, basis).value;
    rhs += sign(j) * term;
  }
  return rhs;
}

}  // namespace

std::string to_string(PairBasis basis) { return basis == PairBasis::CompleteMonomial ? "H_M" : "E_M"; }

PairBasis parse_pair_basis(const std::string& text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  if (upper == "H_M" || upper == "HM" || upper == "H") return PairBasis::CompleteMonomial;
  if (upper == "E_M" || upper == "EM" || upper == "E") return PairBasis::ElementaryMonomial;
  throw InvalidParam("unknown pair basis '" + text + "' (expected H_M or E_M)");
}

PairCoefficient pair_coefficient(const VariableSet& x, const VariableSet& y, std::size_t k, PairBasis basis) {
  std::vector<RingElem> memo;
  memo.reserve(k + 1);
  for (std::size_t j = 0; j <= k; ++j) {
    memo.push_back(basis == PairBasis::CompleteMonomial ? complete_bruteforce(x, j) : elementary_bruteforce(x, j));
  }
  RingElem sum(0L);
  for (const auto& lambda : enumerate_partitions(static_cast<int>(k))) {
    if (lambda.length() > y.size()) continue;  // m_lambda(y) = 0
    RingElem prod(1L);
    for (int part : lambda.parts()) prod *= memo[static_cast<std::size_t>(part)];
    if (prod.is_zero()) continue;
    sum += prod * monomial_sym(y, lambda);
  }
  return {k, std::move(sum), basis};
}

TruncatedSeries pair_product_series(const VariableSet& x, const VariableSet& y, std::size_t order, PairBasis basis) {
  auto acc = TruncatedSeries::constant(RingElem(1L), order);
  for (const auto& xi : x.values()) {
    for (const auto& yj : y.values()) {
      RingElem xy = xi * yj;
      if (basis == PairBasis::CompleteMonomial) {
        acc = series_mul(acc, series_inverse(TruncatedSeries::linear(RingElem(1L), -xy, order)));
      } else {
        acc = series_mul(acc, TruncatedSeries::linear(RingElem(1L), xy, order));
      }
    }
  }
  return acc;
}

PairCoefficient pair_coefficient_via_product(const VariableSet& x, const VariableSet& y, std::size_t k,
                                             PairBasis basis) {
  return {k, pair_product_series(x, y, k, basis)[k], basis};
}

VerificationReport verify_pair_product(const VariableSet& x, const VariableSet& y, std::size_t k, PairBasis basis) {
  return make_report("pair-product", static_cast<long>(k), pair_coefficient(x, y, k, basis).value,
                     pair_coefficient_via_product(x, y, k, basis).value, pair_extra(x, y, basis));
}

VerificationReport verify_pair_symmetry(const VariableSet& x, const VariableSet& y, std::size_t k, PairBasis basis) {
  return make_report("pair-symmetry", static_cast<long>(k), pair_coefficient(x, y, k, basis).value,
                     pair_coefficient(y, x, k, basis).value, pair_extra(x, y, basis));
}

VerificationReport verify_generalized_newton(const VariableSet& x, const VariableSet& y, std::size_t n,
                                             PairBasis basis) {
  if (n == 0) throw InvalidParam("generalized Newton-Girard identity needs n >= 1");
  RingElem lhs = RingElem(static_cast<long>(n)) * pair_coefficient(x, y, n, basis).value;
  RingElem rhs = newton_rhs(x, y, n, basis, [basis](std::size_t j) {
    if (basis == PairBasis::CompleteMonomial) return RingElem(1L);
    // (-1)^(j-1); j = 0 only multiplies p_0 = 0.
    return RingElem(j % 2 == 1 ? 1L : -1L);
  });
  return make_report("generalized-newton", static_cast<long>(n), std::move(lhs), std::move(rhs),
                     pair_extra(x, y, basis));
}

VerificationReport generalized_newton_alternate_sign(const VariableSet& x, const VariableSet& y, std::size_t n) {
  if (n == 0) throw InvalidParam("generalized Newton-Girard identity needs n >= 1");
  const auto basis = PairBasis::ElementaryMonomial;
  RingElem lhs = RingElem(static_cast<long>(n)) * pair_coefficient(x, y, n, basis).value;
  RingElem rhs = newton_rhs(x, y, n, basis, [](std::size_t j) { return RingElem(j % 2 == 0 ? 1L : -1L); });
  return make_report("generalized-newton-alternate-sign", static_cast<long>(n), std::move(lhs), std::move(rhs),
                     pair_extra(x, y, basis));
}

std::vector<VerificationReport> specialize_to_classical(const VariableSet& x, std::size_t n, PairBasis basis) {
  if (n == 0) throw InvalidParam("specialization check needs n >= 1");
  const VariableSet one({RingElem(1L)});
  const bool complete = basis == PairBasis::CompleteMonomial;
  std::vector<VerificationReport> out;
  for (std::size_t k = 0; k <= n; ++k) {
    RingElem classical = complete ? complete_bruteforce(x, k) : elementary_bruteforce(x, k);
    out.push_back(make_report("pair-coefficient-reduces", static_cast<long>(k), pair_coefficient(x, one, k, basis).value,
                              std::move(classical), pair_extra(x, one, basis)));
  }
  auto two_set = verify_generalized_newton(x, one, n, basis);
  auto one_set = complete ? verify_newton_h(x, n) : verify_newton_e(x, n);
  out.push_back(two_set);
  out.push_back(make_report("reduced-lhs", static_cast<long>(n), two_set.lhs, one_set.lhs, pair_extra(x, one, basis)));
  out.push_back(make_report("reduced-rhs", static_cast<long>(n), two_set.rhs, one_set.rhs, pair_extra(x, one, basis)));
  return out;
}

}  // namespace gnewton
