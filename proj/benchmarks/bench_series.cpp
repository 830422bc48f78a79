#include <benchmark/benchmark.h>

#include <cmath>

#include "wprange/series_kernel.hpp"

namespace {

void BM_OddSquareSum(benchmark::State& state) {
  const double x = std::pow(10.0, double(state.range(0)) / 10.0);
  for (auto _ : state) benchmark::DoNotOptimize(wpr::odd_square_exp_sum(x));
  state.SetLabel("x=" + std::to_string(x));
}
BENCHMARK(BM_OddSquareSum)->DenseRange(-30, 20, 10);

void BM_ContinuousCdf(benchmark::State& state) {
  const wpr::Horizon T(double(state.range(0)));
  double h = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wpr::continuous_range_cdf(h, T));
    h = h < 40.0 ? h + 0.37 : 0.5;
  }
}
BENCHMARK(BM_ContinuousCdf)->Arg(1)->Arg(25)->Arg(100);

void BM_ContinuousPdf(benchmark::State& state) {
  const wpr::Horizon T(1.0);
  double h = 0.2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wpr::continuous_range_pdf(h, T));
    h = h < 6.0 ? h + 0.013 : 0.2;
  }
}
BENCHMARK(BM_ContinuousPdf);

void BM_ThetaNome(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wpr::jacobi_theta2_zero(0.1));
}
BENCHMARK(BM_ThetaNome);

}  // namespace
