#include "gnewton/corpus.hpp"

#include "gnewton/errors.hpp"

namespace gnewton {

long CaseRng::uniform(long lo, long hi) {
  if (hi < lo) throw InvalidParam("empty integer range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Rational CaseRng::rational(bool allow_zero) {
  long num = uniform(-9, 9);
  while (!allow_zero && num == 0) num = uniform(-9, 9);
  long den = uniform(1, 9);
  return Rational(num, den);
}

VariableSet CaseRng::variable_set(std::size_t min_size, std::size_t max_size, bool allow_zero) {
  auto size = static_cast<std::size_t>(uniform(static_cast<long>(min_size), static_cast<long>(max_size)));
  std::vector<RingElem> values;
  values.reserve(size);
  for (std::size_t i = 0; i < size; ++i) values.emplace_back(rational(allow_zero));
  return VariableSet(std::move(values));
}

std::vector<VariableSet> random_corpus(const CorpusOptions& options) {
  CaseRng rng(options.seed);
  std::vector<VariableSet> out;
  out.reserve(options.cases);
  for (std::size_t i = 0; i < options.cases; ++i) {
    out.push_back(rng.variable_set(options.min_size, options.max_size, options.allow_zero));
  }
  return out;
}

std::vector<std::pair<VariableSet, VariableSet>> random_pair_corpus(const CorpusOptions& x_options,
                                                                    std::size_t y_min_size, std::size_t y_max_size) {
  CaseRng rng(x_options.seed);
  std::vector<std::pair<VariableSet, VariableSet>> out;
  out.reserve(x_options.cases);
  for (std::size_t i = 0; i < x_options.cases; ++i) {
    VariableSet x = rng.variable_set(x_options.min_size, x_options.max_size, x_options.allow_zero);
    VariableSet y = rng.variable_set(y_min_size, y_max_size, x_options.allow_zero);
    out.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

}  // namespace gnewton
