#include <benchmark/benchmark.h>

#include "conecheck/sweep.hpp"

using namespace conecheck;

namespace {

std::vector<SweepCell> grid(long gammas, long offsets) {
  return make_grid(3, 3 + gammas - 1, 0, offsets - 1, true);
}

void BM_SweepSerial(benchmark::State& state) {
  const auto cells = grid(state.range(0), state.range(1));
  for (auto _ : state) {
    auto rows = run_sweep_serial(cells);
    benchmark::DoNotOptimize(rows);
  }
  state.SetItemsProcessed(state.iterations() * cells.size());
}

void BM_SweepParallel(benchmark::State& state) {
  const auto cells = grid(state.range(0), state.range(1));
  for (auto _ : state) {
    auto rows = run_sweep_parallel(cells);
    benchmark::DoNotOptimize(rows);
  }
  state.SetItemsProcessed(state.iterations() * cells.size());
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Args({6, 26})->Args({8, 60})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Args({6, 26})->Args({8, 60})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
