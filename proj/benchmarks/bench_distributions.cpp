#include <benchmark/benchmark.h>

#include <vector>

#include "wprange/analytics.hpp"
#include "wprange/ddwpr.hpp"
#include "wprange/tddwpr.hpp"

namespace {

void BM_PmfSweep(benchmark::State& state) {
  const wpr::Ddwpr d(double(state.range(0)));
  for (auto _ : state) {
    double s = 0.0;
    for (long r = 0; r <= 100; ++r) s += d.pmf(r);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * 101);
}
BENCHMARK(BM_PmfSweep)->Arg(1)->Arg(25)->Arg(100);

void BM_Moments(benchmark::State& state) {
  const wpr::Ddwpr d(double(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(d.moments());
}
BENCHMARK(BM_Moments)->Arg(1)->Arg(25)->Arg(100);

void BM_TruncatedMoments(benchmark::State& state) {
  const wpr::Tddwpr t(wpr::Ddwpr(25.0), 3, 10);
  for (auto _ : state) benchmark::DoNotOptimize(t.moments());
}
BENCHMARK(BM_TruncatedMoments);

void BM_Quantile(benchmark::State& state) {
  const wpr::Ddwpr d(25.0);
  double u = 0.001;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d.quantile(u));
    u = u < 0.98 ? u + 0.0137 : 0.001;
  }
}
BENCHMARK(BM_Quantile);

void BM_OrderStatisticCdf(benchmark::State& state) {
  const wpr::DiscreteDistView v = wpr::make_view(wpr::Ddwpr(25.0));
  const int n = int(state.range(0));
  for (auto _ : state) {
    double s = 0.0;
    for (long r = 0; r <= 30; ++r) s += wpr::order_stat_cdf(v, {n, n / 2 + 1}, r);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_OrderStatisticCdf)->Arg(2)->Arg(50)->Arg(1000);

void BM_StressStrength(benchmark::State& state) {
  const wpr::DiscreteDistView a = wpr::make_view(wpr::Ddwpr(25.0));
  const wpr::DiscreteDistView b = wpr::make_view(wpr::Ddwpr(1.0));
  for (auto _ : state) benchmark::DoNotOptimize(wpr::stress_strength(a, b, 400));
}
BENCHMARK(BM_StressStrength);

}  // namespace
