// Serial reference kernels against their OpenMP versions.
#include <benchmark/benchmark.h>

#include "chinampa/enumeration.hpp"
#include "chinampa/triangular_sequences.hpp"

namespace {

using namespace chinampa;

void census_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(subset_census_serial(static_cast<int>(state.range(0))));
}

void census_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(subset_census_parallel(static_cast<int>(state.range(0))));
}

void triseq_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_triseq(static_cast<int>(state.range(1)), static_cast<int>(state.range(0))));
}

void triseq_parallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_triseq_parallel(static_cast<int>(state.range(1)), static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(census_serial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(census_parallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(triseq_serial)->Args({5, 3})->Args({6, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(triseq_parallel)->Args({5, 3})->Args({6, 3})->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  chinampa::apply_thread_cap();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
