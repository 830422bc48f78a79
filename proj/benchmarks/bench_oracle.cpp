#include <benchmark/benchmark.h>

#include "wprange/oracle.hpp"
#include "wprange/philox.hpp"

namespace {

void BM_Philox(benchmark::State& state) {
  wpr::CounterStream s(7, 0);
  for (auto _ : state) benchmark::DoNotOptimize(s.uniform());
}
BENCHMARK(BM_Philox);

void BM_SimulateRanges(benchmark::State& state) {
  wpr::OracleConfig cfg;
  cfg.paths = 1000;
  cfg.steps = state.range(0);
  cfg.workers = int(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(wpr::simulate_ranges(cfg));
  state.SetItemsProcessed(state.iterations() * cfg.paths * cfg.steps);
}
BENCHMARK(BM_SimulateRanges)->Args({1024, 1})->Args({16384, 1})->Args({16384, 4})->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
