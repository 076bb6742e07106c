#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gnewton/report.hpp"
#include "gnewton/series.hpp"
#include "gnewton/symfun.hpp"

namespace gnewton {

/// Which two-set kernel a coefficient belongs to.
///   CompleteMonomial   ("H_M"): sum_{lambda |- k} h_lambda(x) m_lambda(y),
///                               the t^k coefficient of prod (1 - x_i y_j t)^-1.
///   ElementaryMonomial ("E_M"): sum_{lambda |- k} e_lambda(x) m_lambda(y),
///                               the t^k coefficient of prod (1 + x_i y_j t).
enum class PairBasis { CompleteMonomial, ElementaryMonomial };

std::string to_string(PairBasis basis);
/// Accepts "H_M" / "E_M" (case-insensitive); throws InvalidParam otherwise.
PairBasis parse_pair_basis(const std::string& text);

struct PairCoefficient {
  std::size_t k = 0;
  RingElem value;
  PairBasis basis = PairBasis::CompleteMonomial;
};

/// Direct summation over partitions of k, with h_j(x) (or e_j(x)) evaluated
/// once per call and reused across partitions.
PairCoefficient pair_coefficient(const VariableSet& x, const VariableSet& y, std::size_t k, PairBasis basis);

/// The full truncated product over all |x|*|y| factors, built in the series
/// engine, at order `order`.
TruncatedSeries pair_product_series(const VariableSet& x, const VariableSet& y, std::size_t order, PairBasis basis);

/// Coefficient k of pair_product_series.
PairCoefficient pair_coefficient_via_product(const VariableSet& x, const VariableSet& y, std::size_t k,
                                             PairBasis basis);

/// pair_coefficient against pair_coefficient_via_product.
VerificationReport verify_pair_product(const VariableSet& x, const VariableSet& y, std::size_t k, PairBasis basis);

/// pair_coefficient(x, y) against pair_coefficient(y, x).
VerificationReport verify_pair_symmetry(const VariableSet& x, const VariableSet& y, std::size_t k, PairBasis basis);

/// Two-set Newton-Girard identity at degree n >= 1, with C_k the pair
/// coefficients and p_0 = 0 (so the k = n term vanishes):
///   H_M:  n C_n = sum_{k=0}^n p_(n-k)(x) p_(n-k)(y) C_k
///   E_M:  n C_n = sum_{k=0}^n (-1)^(n-k-1) p_(n-k)(x) p_(n-k)(y) C_k
/// Every C_k on the right is recomputed by its own call, independently of the
/// left side.
VerificationReport verify_generalized_newton(const VariableSet& x, const VariableSet& y, std::size_t n,
                                             PairBasis basis);

/// Same right-hand side but with the sign (-1)^(n-k) on the E_M terms. This
/// is the negation of the true right-hand side; kept to document that form.
VerificationReport generalized_newton_alternate_sign(const VariableSet& x, const VariableSet& y, std::size_t n);

/// Y = {1}: checks C_k = h_k(x) (resp. e_k(x)) for 0 <= k <= n, and that both
/// sides of the two-set identity at degree n coincide with the corresponding
/// sides of the one-set Newton-Girard identity.
std::vector<VerificationReport> specialize_to_classical(const VariableSet& x, std::size_t n, PairBasis basis);

}  // namespace gnewton
