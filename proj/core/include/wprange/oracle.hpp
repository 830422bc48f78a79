#pragma once

// Brute-force check of the analytic range law: simulate Wiener paths on a
// uniform grid, floor their ranges, and compare the empirical law with the
// series-based one.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "wprange/ddwpr.hpp"
#include "wprange/tddwpr.hpp"

namespace wpr {

struct OracleConfig {
  double T = 1.0;
  long paths = 100'000;
  long steps = 16'384;  // Gaussian increments per path, each of variance T / steps
  std::uint64_t seed = 7;
  long r_max = 20;      // cdf comparison covers r = 0..r_max
  int workers = 1;      // results do not depend on this

  // Throws DomainError unless T > 0, paths >= 1, steps >= 2, r_max >= 1, workers >= 1.
  void validate() const;
};

// Refuse runs with more than this many path increments.
inline constexpr double kMaxPathIncrements = 1e10;

// floor(max W - min W) for each path. Path i draws its increments from the
// counter stream (seed, i), so output is bit-identical for any worker count.
// Throws ResourceLimitError above kMaxPathIncrements.
std::vector<long> simulate_ranges(const OracleConfig& cfg);

// Budget for the grid's underestimate of the range: 1.2 sqrt(T / steps).
double path_bias_bound(double T, long steps);

// Half-width of the two-sided DKW band at confidence 1 - alpha.
double dkw_band(std::size_t n, double alpha);

struct CompareOptions {
  long r_max = 20;
  double bias_bound = 0.0;  // 0 for samples drawn from the analytic law itself
  double alpha = 0.01;
};

struct OracleReport {
  std::size_t sample_size = 0;  // after window filtering
  std::map<long, double> empirical_pmf;
  std::map<long, double> empirical_cdf;  // over the compared range
  double mean = 0.0;
  double variance = 0.0;        // population (divide by n)
  double third_central = 0.0;
  double fourth_central = 0.0;
  double std_error_mean = 0.0;
  double analytic_mean = 0.0;
  double max_abs_cdf_deviation = 0.0;
  long worst_r = 0;
  double dkw_band = 0.0;
  double discretization_bias_bound = 0.0;
  bool pass = false;  // max_abs_cdf_deviation <= dkw_band + discretization_bias_bound
};

// Throws DomainError on an empty sample.
OracleReport compare_to_analytic(std::span<const long> sample, const Ddwpr& dist,
                                 const CompareOptions& opts);

// Keeps only a < R <= b (rejection) and compares with the truncated cdf on [a, b].
// Throws DomainError when no draw falls in the window.
OracleReport compare_to_analytic(std::span<const long> sample, const Tddwpr& dist,
                                 const CompareOptions& opts);

}  // namespace wpr
