#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gnewton/symfun.hpp"

namespace gnewton {

/// Portable case generator: std::mt19937_64 seeded with the 64-bit seed, and
/// integers drawn as lo + (raw % (hi - lo + 1)). The raw engine output is fixed
/// by the C++ standard, so case lists are reproducible across platforms and
/// across implementations that follow the same recipe.
class CaseRng {
 public:
  explicit CaseRng(std::uint64_t seed) : engine_(seed) {}

  long uniform(long lo, long hi);
  /// numerator in [-9, 9] (redrawn while zero unless allow_zero), denominator in [1, 9]
  Rational rational(bool allow_zero);
  /// size drawn in [min_size, max_size], then that many rationals
  VariableSet variable_set(std::size_t min_size, std::size_t max_size, bool allow_zero);

 private:
  std::mt19937_64 engine_;
};

struct CorpusOptions {
  std::uint64_t seed = 42;
  std::size_t cases = 200;
  std::size_t min_size = 1;
  std::size_t max_size = 6;
  bool allow_zero = false;
};

std::vector<VariableSet> random_corpus(const CorpusOptions& options);

/// (X, Y) pairs; X is drawn before Y for each case.
std::vector<std::pair<VariableSet, VariableSet>> random_pair_corpus(const CorpusOptions& x_options,
                                                                    std::size_t y_min_size, std::size_t y_max_size);

}  // namespace gnewton
