#include "gnewton/suites.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <set>

#include "gnewton/corpus.hpp"
#include "gnewton/errors.hpp"
#include "gnewton/families.hpp"
#include "gnewton/series.hpp"
#include "gnewton/symfun.hpp"
#include "gnewton/twovar.hpp"

namespace gnewton {

namespace {

constexpr PairBasis kBases[] = {PairBasis::CompleteMonomial, PairBasis::ElementaryMonomial};

struct Grid {
  long lo;
  long hi;
};

void check_params(const SuiteOptions& options, const std::set<std::string>& allowed, const std::string& suite) {
  for (const auto& [key, value] : options.params) {
    if (allowed.count(key) == 0) throw InvalidParam("suite " + suite + " does not take parameter '" + key + "'");
  }
}

std::size_t or_default(std::size_t value, std::size_t fallback) { return value == 0 ? fallback : value; }

// Either the single value options.n or the default range.
Grid n_grid(const SuiteOptions& options, Grid fallback) {
  if (options.n) return {*options.n, *options.n};
  return fallback;
}

std::vector<Rational> rational_list(const SuiteOptions& options, const std::string& key,
                                    const std::vector<Rational>& fallback) {
  auto it = options.params.find(key);
  if (it == options.params.end()) return fallback;
  return {Rational::parse(it->second)};
}

std::vector<long> integer_list(const SuiteOptions& options, const std::string& key, const std::vector<long>& fallback) {
  auto it = options.params.find(key);
  if (it == options.params.end()) return fallback;
  Rational v = Rational::parse(it->second);
  if (v.den() != 1) throw InvalidParam("parameter '" + key + "' must be an integer");
  return {v.num().get_si()};
}

nlohmann::json operands(const VariableSet& x) { return {{"x", to_json(x.values())}}; }

nlohmann::json operands(const VariableSet& x, const VariableSet& y) {
  return {{"x", to_json(x.values())}, {"y", to_json(y.values())}};
}

void append(std::vector<VerificationReport>& out, std::vector<VerificationReport> more) {
  for (auto& r : more) out.push_back(std::move(r));
}

CorpusOptions corpus_options(const SuiteOptions& options, std::size_t cases, std::size_t max_size) {
  CorpusOptions c;
  c.seed = options.seed;
  c.cases = or_default(options.cases, cases);
  c.max_size = or_default(options.max_size, max_size);
  c.min_size = 1;
  if (options.nx) c.min_size = c.max_size = *options.nx;
  c.allow_zero = options.allow_zero;
  return c;
}

std::vector<VariableSet> set_corpus(const SuiteOptions& options, std::size_t cases, std::size_t max_size) {
  if (options.x) return {*options.x};
  return random_corpus(corpus_options(options, cases, max_size));
}

std::vector<std::pair<VariableSet, VariableSet>> pair_corpus(const SuiteOptions& options) {
  if (options.x) return {{*options.x, options.y.value_or(*options.x)}};
  auto c = corpus_options(options, 100, 4);
  std::size_t y_min = options.ny ? *options.ny : 1;
  std::size_t y_max = options.ny ? *options.ny : or_default(options.max_size, 4);
  return random_pair_corpus(c, y_min, y_max);
}

// --- random-corpus suites --------------------------------------------------

SuiteResult newton_suite(const std::string& name, const SuiteOptions& options, bool elementary) {
  check_params(options, {}, name);
  const auto corpus = set_corpus(options, 200, 6);
  const auto n_max = static_cast<std::size_t>(options.n.value_or(10));
  return run_cases(
      name, corpus.size(),
      [&](std::size_t i) {
        CaseOutcome out{{}, operands(corpus[i])};
        const BasisTable brute = bruteforce_table(corpus[i], n_max);
        for (std::size_t n = 1; n <= n_max; ++n) {
          out.reports.push_back(elementary ? verify_newton_e(brute, n) : verify_newton_h(brute, n));
        }
        return out;
      },
      options.execution);
}

SuiteResult convolution_suite(const SuiteOptions& options) {
  check_params(options, {}, "convolution");
  const auto corpus = set_corpus(options, 200, 6);
  const auto n_max = static_cast<std::size_t>(options.n.value_or(10));
  return run_cases(
      "convolution", corpus.size(),
      [&](std::size_t i) {
        CaseOutcome out{{}, operands(corpus[i])};
        const BasisTable brute = bruteforce_table(corpus[i], n_max);
        for (std::size_t n = 1; n <= n_max; ++n) append(out.reports, verify_power_sum_convolution(brute, n));
        return out;
      },
      options.execution);
}

SuiteResult pair_suite(const std::string& name, const SuiteOptions& options, bool symmetry) {
  check_params(options, {}, name);
  const auto pairs = pair_corpus(options);
  const auto k_max = static_cast<std::size_t>(options.k_max.value_or(options.n.value_or(6)));
  return run_cases(
      name, pairs.size(),
      [&](std::size_t i) {
        const auto& [x, y] = pairs[i];
        CaseOutcome out{{}, operands(x, y)};
        for (auto basis : kBases) {
          for (std::size_t k = 0; k <= k_max; ++k) {
            out.reports.push_back(symmetry ? verify_pair_symmetry(x, y, k, basis) : verify_pair_product(x, y, k, basis));
          }
        }
        return out;
      },
      options.execution);
}

SuiteResult generalized_newton_suite(const SuiteOptions& options) {
  check_params(options, {}, "generalized-newton");
  const auto pairs = pair_corpus(options);
  const auto n_max = static_cast<std::size_t>(options.n.value_or(6));
  const std::size_t count = pairs.size();
  // Cases [0, count): random pairs. [count, 2 count): one-variable collapse
  // on the first entries of each pair. [2 count, 3 count): Y = {1} reduction.
  return run_cases(
      "generalized-newton", 3 * count,
      [&](std::size_t i) {
        const auto& [x, y] = pairs[i % count];
        CaseOutcome out;
        if (i < count) {
          out.operands = operands(x, y);
          for (auto basis : kBases) {
            for (std::size_t n = 1; n <= n_max; ++n) out.reports.push_back(verify_generalized_newton(x, y, n, basis));
          }
        } else if (i < 2 * count) {
          const VariableSet a({x[0]});
          const VariableSet b({y[0]});
          out.operands = operands(a, b);
          for (std::size_t n = 1; n <= n_max; ++n) {
            auto rep = verify_generalized_newton(a, b, n, PairBasis::CompleteMonomial);
            RingElem closed = RingElem(static_cast<long>(n)) * (x[0] * y[0]).pow(static_cast<unsigned>(n));
            out.reports.push_back(make_report("single-variable-collapse-lhs", static_cast<long>(n), rep.lhs, closed));
            out.reports.push_back(make_report("single-variable-collapse-rhs", static_cast<long>(n), rep.rhs, closed));
            out.reports.push_back(std::move(rep));
            out.reports.push_back(verify_generalized_newton(a, b, n, PairBasis::ElementaryMonomial));
          }
        } else {
          out.operands = operands(x, VariableSet({RingElem(1L)}));
          for (auto basis : kBases) {
            for (std::size_t n = 1; n <= n_max; ++n) append(out.reports, specialize_to_classical(x, n, basis));
          }
        }
        return out;
      },
      options.execution);
}

// The E-form with the sign (-1)^(n-k) instead of (-1)^(n-k-1). Its right
// side is the negated correct one, so every case with a nonzero left side
// fails. Not part of "all"; it exercises the failure path end to end.
SuiteResult alternate_sign_suite(const SuiteOptions& options) {
  check_params(options, {}, "generalized-newton-alt-sign");
  const auto pairs = pair_corpus(options);
  const auto n_max = static_cast<std::size_t>(options.n.value_or(6));
  return run_cases(
      "generalized-newton-alt-sign", pairs.size(),
      [&](std::size_t i) {
        const auto& [x, y] = pairs[i];
        CaseOutcome out{{}, operands(x, y)};
        for (std::size_t n = 1; n <= n_max; ++n) out.reports.push_back(generalized_newton_alternate_sign(x, y, n));
        return out;
      },
      options.execution);
}

SuiteResult series_suite(const SuiteOptions& options) {
  check_params(options, {}, "series");
  const auto corpus = set_corpus(options, 50, 5);
  const std::size_t order = options.truncation.value_or(12);
  if (order == 0) throw InvalidParam("series suite needs truncation >= 1");
  return run_cases(
      "series", corpus.size(),
      [&](std::size_t i) {
        const VariableSet& x = corpus[i];
        CaseOutcome out{{}, operands(x)};
        const auto e = build_E(x, order);
        const auto h = build_H(x, order);
        const auto p = build_P(x, order);
        const auto unit = series_mul(h, negate_t(e));
        const auto logd = log_derivative(h);
        const auto p_short = build_P(x, order - 1);
        const auto conv = series_mul(apply_t_ddt(h), negate_t(e));
        const BasisTable brute = bruteforce_table(x, order + 1);
        for (std::size_t k = 0; k <= order; ++k) {
          auto n = static_cast<long>(k);
          out.reports.push_back(make_report("series-h-times-e-neg", n, unit[k], RingElem(k == 0 ? 1L : 0L)));
          if (k < order) out.reports.push_back(make_report("series-log-derivative", n, logd[k], p_short[k]));
          out.reports.push_back(make_report("series-t-dh-e-neg", n, conv[k], brute.p[k]));
          out.reports.push_back(make_report("series-e-coefficient", n, e[k], brute.e[k]));
          out.reports.push_back(make_report("series-h-coefficient", n, h[k], brute.h[k]));
          out.reports.push_back(make_report("series-p-coefficient", n, p[k], brute.p[k + 1]));
        }
        return out;
      },
      options.execution);
}

// --- family suites -----------------------------------------------------------

template <typename CaseFn>
SuiteResult grid_suite(const std::string& name, std::size_t count, const SuiteOptions& options, CaseFn fn) {
  return run_cases(
      name, count,
      [&](std::size_t i) {
        CaseOutcome out;
        out.reports = fn(i);
        if (!out.reports.empty()) out.operands = out.reports.front().extra.value("family", nlohmann::json());
        return out;
      },
      options.execution);
}

SuiteResult ones_suite(const SuiteOptions& options) {
  check_params(options, {}, "ones-row");
  const Grid g = n_grid(options, {0, 8});
  const long k_max = options.k_max.value_or(8);
  return grid_suite("ones-row", static_cast<std::size_t>(g.hi - g.lo + 1), options,
                    [&](std::size_t i) { return verify_ones_row(g.lo + static_cast<long>(i), k_max); });
}

SuiteResult q_suite(const SuiteOptions& options) {
  check_params(options, {}, "q-row");
  const Grid g = n_grid(options, {1, 6});
  const long k_max = options.k_max.value_or(6);
  return grid_suite("q-row", static_cast<std::size_t>(g.hi - g.lo + 1), options,
                    [&](std::size_t i) { return verify_q_row(g.lo + static_cast<long>(i), k_max); });
}

std::vector<std::pair<Rational, Rational>> progression_pairs(const SuiteOptions& options) {
  if (options.params.count("r") != 0 || options.params.count("m") != 0) {
    return {{rational_list(options, "r", {Rational(0)}).front(), rational_list(options, "m", {Rational(1)}).front()}};
  }
  return {{Rational(1), Rational(3)},
          {Rational(0), Rational(1)},
          {Rational(2), Rational(5)},
          {Rational(1, 2), Rational(1, 3)},
          {Rational(-3, 4), Rational(2, 5)}};
}

SuiteResult arith_prog_suite(const SuiteOptions& options) {
  check_params(options, {"r", "m"}, "arith-prog");
  const auto pairs = progression_pairs(options);
  const Grid g = n_grid(options, {0, 5});
  const long k_max = options.k_max.value_or(4);
  const auto per_pair = static_cast<std::size_t>(g.hi - g.lo + 1);
  return grid_suite("arith-prog", pairs.size() * per_pair, options, [&](std::size_t i) {
    const auto& [r, m] = pairs[i / per_pair];
    const long n = g.lo + static_cast<long>(i % per_pair);
    std::vector<VerificationReport> out;
    for (long k = 1; k <= k_max; ++k) out.push_back(verify_arith_prog_power_sum(r, m, n, k));
    return out;
  });
}

SuiteResult whitney_suite(const SuiteOptions& options) {
  check_params(options, {"r", "m"}, "whitney");
  const auto pairs = progression_pairs(options);
  const Grid g = n_grid(options, {1, 5});
  const long k_max = options.k_max.value_or(4);
  const auto per_block = static_cast<std::size_t>(g.hi - g.lo + 1);
  // Block 0: Stirling cross-check at (m, r) = (1, 0); then one block per pair.
  return grid_suite("whitney", (pairs.size() + 1) * per_block, options, [&](std::size_t i) {
    const std::size_t block = i / per_block;
    const long n = g.lo + static_cast<long>(i % per_block);
    if (block == 0) {
      std::vector<VerificationReport> out;
      for (long k = 0; k <= k_max; ++k) append(out, verify_whitney_stirling_crosscheck(n, k));
      return out;
    }
    const auto& [r, m] = pairs[block - 1];
    return verify_whitney_row(r, m, n, k_max);
  });
}

SuiteResult jacobi_suite(const SuiteOptions& options) {
  check_params(options, {"gamma"}, "jacobi-stirling");
  std::vector<RingElem> gammas;
  if (options.params.count("gamma") != 0) {
    gammas.emplace_back(Rational::parse(options.params.at("gamma")));
  } else {
    // Four reference points, four more so that every degree <= 7 identity in
    // gamma is pinned, and gamma itself as an indeterminate.
    for (auto g : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(7, 3), Rational(0), Rational(-1), Rational(2),
                   Rational(5, 4)}) {
      gammas.emplace_back(g);
    }
    gammas.push_back(RingElem::indeterminate("gamma"));
  }
  const Grid g = n_grid(options, {1, 5});
  const long k_max = options.k_max.value_or(5);
  const auto per_gamma = static_cast<std::size_t>(g.hi - g.lo + 1);
  return grid_suite("jacobi-stirling", gammas.size() * per_gamma, options, [&](std::size_t i) {
    return verify_jacobi_stirling_row(g.lo + static_cast<long>(i % per_gamma), gammas[i / per_gamma], k_max);
  });
}

SuiteResult zeta_suite(const SuiteOptions& options) {
  check_params(options, {"s"}, "zeta-row");
  const auto ss = integer_list(options, "s", {1, 2, 3});
  const Grid g = n_grid(options, {1, 8});
  const long k_max = options.k_max.value_or(5);
  const auto per_s = static_cast<std::size_t>(g.hi - g.lo + 1);
  return grid_suite("zeta-row", ss.size() * per_s, options, [&](std::size_t i) {
    return verify_zeta_row(ss[i / per_s], g.lo + static_cast<long>(i % per_s), k_max);
  });
}

SuiteResult prime_suite(const SuiteOptions& options) {
  check_params(options, {"s", "limit"}, "prime-row");
  const auto ss = integer_list(options, "s", {1, 2});
  const long limit = integer_list(options, "limit", {50}).front();
  const long k_max = options.k_max.value_or(3);
  return grid_suite("prime-row", ss.size(), options,
                    [&](std::size_t i) { return verify_prime_row(ss[i], limit, k_max); });
}

}  // namespace

std::size_t SuiteResult::failures() const {
  return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.equal; }));
}

nlohmann::json SuiteResult::to_json() const {
  auto reps = nlohmann::json::array();
  for (const auto& r : reports) reps.push_back(gnewton::to_json(r));
  return {{"suite", name},   {"cases", cases},       {"checks", reports.size()},
          {"failed", failures()}, {"passed", passed()}, {"reports", std::move(reps)}};
}

SuiteResult run_cases(const std::string& name, std::size_t count, const std::function<CaseOutcome(std::size_t)>& case_fn,
                      Execution execution) {
  std::vector<CaseOutcome> outcomes(count);
  if (execution == Execution::Serial) {
    for (std::size_t i = 0; i < count; ++i) outcomes[i] = case_fn(i);
  } else {
    std::exception_ptr error;
    const auto n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
      try {
        outcomes[static_cast<std::size_t>(i)] = case_fn(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(gnewton_case_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  }
  SuiteResult result;
  result.name = name;
  result.cases = count;
  for (std::size_t i = 0; i < count; ++i) {
    for (auto& r : outcomes[i].reports) {
      r.extra["case"] = i;
      if (!r.equal) r.extra["operands"] = outcomes[i].operands;
      result.reports.push_back(std::move(r));
    }
  }
  return result;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "newton-e", "newton-h", "convolution", "pair-product", "pair-symmetry", "generalized-newton", "series",
      "ones-row", "q-row",    "arith-prog",  "whitney",      "jacobi-stirling", "zeta-row",       "prime-row"};
  return names;
}

std::string canonical_suite_name(const std::string& name) {
  static const std::map<std::string, std::string> aliases{{"theorem1", "convolution"},
                                                          {"lemma2", "pair-product"},
                                                          {"corollary", "pair-symmetry"},
                                                          {"theorem4", "generalized-newton"}};
  auto it = aliases.find(name);
  return it == aliases.end() ? name : it->second;
}

SuiteResult run_suite(const std::string& raw_name, const SuiteOptions& options) {
  const std::string name = canonical_suite_name(raw_name);
  if (name == "newton-e") return newton_suite(name, options, true);
  if (name == "newton-h") return newton_suite(name, options, false);
  if (name == "convolution") return convolution_suite(options);
  if (name == "pair-product") return pair_suite(name, options, false);
  if (name == "pair-symmetry") return pair_suite(name, options, true);
  if (name == "generalized-newton") return generalized_newton_suite(options);
  if (name == "generalized-newton-alt-sign") return alternate_sign_suite(options);
  if (name == "series") return series_suite(options);
  if (name == "ones-row") return ones_suite(options);
  if (name == "q-row") return q_suite(options);
  if (name == "arith-prog") return arith_prog_suite(options);
  if (name == "whitney") return whitney_suite(options);
  if (name == "jacobi-stirling") return jacobi_suite(options);
  if (name == "zeta-row") return zeta_suite(options);
  if (name == "prime-row") return prime_suite(options);
  throw InvalidParam("unknown suite '" + raw_name + "'");
}

}  // namespace gnewton
