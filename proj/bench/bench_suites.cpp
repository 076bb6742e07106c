// Serial reference vs OpenMP case runner on the heavier suites.
// OMP_NUM_THREADS controls the parallel width.

#include <benchmark/benchmark.h>

#include "gnewton/suites.hpp"

namespace {

const char* const kSuites[] = {"newton-e", "convolution", "generalized-newton", "series", "jacobi-stirling"};

void BM_Suite(benchmark::State& state, gnewton::Execution exec) {
  const std::string name = kSuites[state.range(0)];
  gnewton::SuiteOptions opts;
  opts.execution = exec;
  std::size_t checks = 0;
  for (auto _ : state) {
    auto result = gnewton::run_suite(name, opts);
    checks = result.reports.size();
    benchmark::DoNotOptimize(result);
  }
  state.SetLabel(name);
  state.counters["checks"] = static_cast<double>(checks);
}

void Serial(benchmark::State& state) { BM_Suite(state, gnewton::Execution::Serial); }
void Parallel(benchmark::State& state) { BM_Suite(state, gnewton::Execution::Parallel); }

}  // namespace

BENCHMARK(Serial)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(Parallel)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
