#pragma once

// Test-only oracles. These evaluate the defining series by brute force in
// long double and never touch the library's transformed evaluators.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace wpr::testing {

inline long double brute_cdf(long double h, long double T, long double pi = std::numbers::pi_v<long double>) {
  if (h <= 0) return 0;
  long double acc = 0;
  for (int k = 1; k <= 200'000; ++k) {
    const long double m = (2.0L * k - 1) * (2.0L * k - 1);
    const long double t = (8.0L / (m * pi * pi) + 8.0L * T / (h * h)) *
                          std::exp(-m * pi * pi * T / (2.0L * h * h));
    acc += t;
    if (t < 1e-30L && k > 3) break;
  }
  return acc;
}

inline long double brute_odd_square(long double x) {
  long double acc = 0;
  for (int k = 1; k <= 200'000; ++k) {
    const long double t = std::exp(-(2.0L * k - 1) * (2.0L * k - 1) * x);
    acc += t;
    if (t < 1e-30L) break;
  }
  return acc;
}

inline long double brute_pmf(long r, long double T) { return brute_cdf(r + 1, T) - brute_cdf(r, T); }

// Relative-or-absolute closeness used throughout the golden checks.
inline bool close_rel_abs(double got, double want, double rel, double abs) {
  return std::abs(got - want) <= abs || std::abs(got - want) <= rel * std::abs(want);
}

// Seeded generator for property-style tests.
class Gen {
public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }

private:
  std::mt19937_64 eng_;
};

}  // namespace wpr::testing
