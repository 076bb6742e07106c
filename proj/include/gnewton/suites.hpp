#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gnewton/report.hpp"
#include "gnewton/symfun.hpp"

namespace gnewton {

/// Serial is the reference path; Parallel spreads cases over OpenMP threads.
/// Both produce identical, case-ordered results.
enum class Execution { Serial, Parallel };

struct SuiteOptions {
  std::uint64_t seed = 42;
  /// Random cases; 0 selects the suite default.
  std::size_t cases = 0;
  /// Upper bound for random X sizes; 0 selects the suite default.
  std::size_t max_size = 0;
  /// Fixed sizes of X / Y for the two-set suites.
  std::optional<std::size_t> nx;
  std::optional<std::size_t> ny;
  /// Identity degree bound (or the single family n when set for row suites).
  std::optional<long> n;
  std::optional<long> k_max;
  std::optional<std::size_t> truncation;
  bool allow_zero = false;
  /// Fixed operands: when set, the random-corpus suites run on this single X
  /// (and Y for the two-set suites; Y defaults to X) instead of random cases.
  std::optional<VariableSet> x;
  std::optional<VariableSet> y;
  /// Family parameter overrides for the row suites (s, limit, gamma, r, m, q).
  std::map<std::string, std::string> params;
  Execution execution = Execution::Parallel;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<VerificationReport> reports;

  std::size_t failures() const;
  bool passed() const { return failures() == 0 && !reports.empty(); }
  /// {"suite", "cases", "checks", "failed", "passed", "reports": [...]}
  nlohmann::json to_json() const;
};

/// One case: its reports plus a JSON dump of its operands, attached to any
/// failing report.
struct CaseOutcome {
  std::vector<VerificationReport> reports;
  nlohmann::json operands;
};

/// Evaluates case_fn(0..count-1) and concatenates the outcomes in case order.
/// Every report gets a "case" field.
SuiteResult run_cases(const std::string& name, std::size_t count, const std::function<CaseOutcome(std::size_t)>& case_fn,
                      Execution execution);

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs one named suite. Defaults reproduce the acceptance grids:
///   newton-e, newton-h, convolution   200 random sets (size <= 6), 1 <= n <= 10
///   pair-product, pair-symmetry        100 random pairs (sizes <= 4), k <= 6, both bases
///   generalized-newton                 same pairs, 1 <= n <= 6, both bases, plus the
///                                      one-variable collapse and Y = {1} reductions
///   series                             50 random sets (size <= 5), truncation 12
///   ones-row, q-row, arith-prog, whitney, jacobi-stirling, zeta-row, prime-row
///                                      fixed parameter grids
/// Throws InvalidParam for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

/// Canonical name for a suite, resolving aliases.
std::string canonical_suite_name(const std::string& name);

}  // namespace gnewton
