#include "gnewton/symfun.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "gnewton/errors.hpp"

namespace gnewton {

namespace {

// Accumulates products over index tuples i_1 < ... < i_k (strict) or
// i_1 <= ... <= i_k (weak) by depth-first search with running prefix products.
void accumulate_chains(const std::vector<RingElem>& xs, std::size_t start, std::size_t remaining, bool strict,
                       const RingElem& prefix, RingElem& sum) {
  if (remaining == 0) {
    sum += prefix;
    return;
  }
  for (std::size_t i = start; i < xs.size(); ++i) {
    if (strict && xs.size() - i < remaining) break;
    accumulate_chains(xs, strict ? i + 1 : i, remaining - 1, strict, prefix * xs[i], sum);
  }
}

RingElem sign(std::size_t exponent) { return RingElem(exponent % 2 == 0 ? 1L : -1L); }

RingElem integer(std::size_t value) { return RingElem(static_cast<long>(value)); }

void require_degree(const BasisTable& t, std::size_t n) {
  if (t.e.size() <= n || t.h.size() <= n || t.p.size() <= n) {
    throw InvalidParam("basis table does not reach degree " + std::to_string(n));
  }
}

}  // namespace

VariableSet::VariableSet(std::vector<RingElem> values) : values_(std::move(values)) {
  const UniPoly* first = nullptr;
  for (const auto& v : values_) {
    if (!v.is_poly()) continue;
    if (first == nullptr) {
      first = &v.poly();
    } else if (first->var() != v.poly().var()) {
      throw IndeterminateMismatch("variable set mixes indeterminates '" + first->var() + "' and '" +
                                  v.poly().var() + "'");
    }
  }
}

VariableSet VariableSet::parse(const std::string& text) {
  std::vector<RingElem> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    values.emplace_back(Rational::parse(item));
  }
  return VariableSet(std::move(values));
}

RingElem elementary_bruteforce(const VariableSet& x, std::size_t k) {
  RingElem sum(0L);
  if (k > x.size()) return sum;
  accumulate_chains(x.values(), 0, k, true, RingElem(1L), sum);
  return sum;
}

RingElem complete_bruteforce(const VariableSet& x, std::size_t k) {
  if (k == 0) return RingElem(1L);
  RingElem sum(0L);
  accumulate_chains(x.values(), 0, k, false, RingElem(1L), sum);
  return sum;
}

RingElem power_sum(const VariableSet& x, std::size_t k) {
  RingElem sum(0L);
  if (k == 0) return sum;
  for (const auto& v : x.values()) sum += v.pow(static_cast<unsigned>(k));
  return sum;
}

RingElem monomial_sym(const VariableSet& x, const Partition& lambda) {
  RingElem sum(0L);
  if (lambda.length() > x.size()) return sum;
  // Exponent vectors are the distinct permutations of lambda padded with zeros.
  std::vector<int> exps(x.size(), 0);
  std::copy(lambda.parts().begin(), lambda.parts().end(), exps.begin());
  std::sort(exps.begin(), exps.end());
  do {
    RingElem term(1L);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] != 0) term *= x[i].pow(static_cast<unsigned>(exps[i]));
    }
    sum += term;
  } while (std::next_permutation(exps.begin(), exps.end()));
  return sum;
}

BasisTable bruteforce_table(const VariableSet& x, std::size_t max_degree) {
  BasisTable t;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    t.e.push_back(elementary_bruteforce(x, k));
    t.h.push_back(complete_bruteforce(x, k));
    t.p.push_back(power_sum(x, k));
  }
  return t;
}

BasisTable basis_table(const VariableSet& x, std::size_t max_degree) {
  BasisTable t;
  t.p.push_back(RingElem(0L));
  std::vector<RingElem> powers(x.values());
  for (std::size_t k = 1; k <= max_degree; ++k) {
    RingElem sum(0L);
    for (std::size_t i = 0; i < powers.size(); ++i) {
      sum += powers[i];
      powers[i] *= x[i];
    }
    t.p.push_back(std::move(sum));
  }
  t.e.push_back(RingElem(1L));
  t.h.push_back(RingElem(1L));
  for (std::size_t n = 1; n <= max_degree; ++n) {
    RingElem en(0L);
    RingElem hn(0L);
    for (std::size_t k = 1; k <= n; ++k) {
      en += sign(k - 1) * t.p[k] * t.e[n - k];
      hn += t.p[k] * t.h[n - k];
    }
    t.e.push_back(en / Rational(static_cast<long>(n)));
    t.h.push_back(hn / Rational(static_cast<long>(n)));
  }
  return t;
}

RingElem elementary_product(const BasisTable& table, const Partition& lambda) {
  RingElem prod(1L);
  for (int part : lambda.parts()) prod *= table.e.at(static_cast<std::size_t>(part));
  return prod;
}

RingElem complete_product(const BasisTable& table, const Partition& lambda) {
  RingElem prod(1L);
  for (int part : lambda.parts()) prod *= table.h.at(static_cast<std::size_t>(part));
  return prod;
}

VerificationReport verify_newton_e(const BasisTable& brute, std::size_t n) {
  require_degree(brute, n);
  RingElem rhs(0L);
  for (std::size_t k = 1; k <= n; ++k) rhs += sign(k - 1) * brute.p[k] * brute.e[n - k];
  return make_report("newton-e", static_cast<long>(n), integer(n) * brute.e[n], std::move(rhs));
}

VerificationReport verify_newton_h(const BasisTable& brute, std::size_t n) {
  require_degree(brute, n);
  RingElem rhs(0L);
  for (std::size_t k = 1; k <= n; ++k) rhs += brute.p[k] * brute.h[n - k];
  return make_report("newton-h", static_cast<long>(n), integer(n) * brute.h[n], std::move(rhs));
}

VerificationReport verify_newton_e(const VariableSet& x, std::size_t n) {
  return verify_newton_e(bruteforce_table(x, n), n);
}

VerificationReport verify_newton_h(const VariableSet& x, std::size_t n) {
  return verify_newton_h(bruteforce_table(x, n), n);
}

PowerSumConvolutions power_sum_convolutions(const BasisTable& brute, std::size_t n) {
  require_degree(brute, n);
  PowerSumConvolutions out{RingElem(0L), RingElem(0L), brute.p[n]};
  // k = 0 terms carry the factor k and vanish; the range stays literal.
  for (std::size_t k = 0; k <= n; ++k) {
    out.via_elementary_first += (k == 0 ? RingElem(-1L) : sign(k - 1)) * integer(k) * brute.e[k] * brute.h[n - k];
    out.via_complete_first += sign(n - k) * integer(k) * brute.h[k] * brute.e[n - k];
  }
  return out;
}

PowerSumConvolutions power_sum_convolutions(const VariableSet& x, std::size_t n) {
  return power_sum_convolutions(bruteforce_table(x, n), n);
}

std::vector<VerificationReport> verify_power_sum_convolution(const BasisTable& brute, std::size_t n) {
  auto conv = power_sum_convolutions(brute, n);
  std::vector<VerificationReport> out;
  out.push_back(make_report("convolution-e-first", static_cast<long>(n), conv.via_elementary_first, conv.power_sum));
  out.push_back(make_report("convolution-h-first", static_cast<long>(n), conv.via_complete_first, conv.power_sum));
  return out;
}

}  // namespace gnewton
