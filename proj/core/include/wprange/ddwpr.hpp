#pragma once

#include <span>
#include <vector>

#include "wprange/moments.hpp"
#include "wprange/series_kernel.hpp"

namespace wpr {

// Law of R(T) = floor(Rbar(T)), the integer part of the range of a standard
// Wiener process over (0, T). Immutable after construction.
class Ddwpr {
public:
  // Throws DomainError on a non-positive T or an invalid control block.
  explicit Ddwpr(double T, SeriesControl ctrl = {});

  double horizon() const noexcept { return T_.value(); }
  const SeriesControl& control() const noexcept { return ctrl_; }

  // P[R = r], r >= 0.
  double pmf(long r) const;
  // P[R <= r]; zero for r < 0.
  double cdf(long r) const;
  // P[R >= r]; one for r <= 0.
  double survival(long r) const;

  // P[lo < R <= hi]; zero when hi <= lo.
  double interval_mass(long lo, long hi) const;
  // sum_{j >= r} pmf(j). Equals survival(r) with exact pi; with a rounded
  // pi the cdf series does not tend to 1 and the two differ.
  double upper_tail_mass(long r) const;

  // pmf(r) / survival(r). Throws UndefinedMeasureError when survival(r) <= eps.
  double hazard(long r) const;
  // pmf(r) / cdf(r). Throws UndefinedMeasureError when cdf(r) == 0.
  double reversed_hazard(long r) const;
  // log(survival(r) / survival(r + 1)).
  double second_rate_of_failure(long r) const;

  // E[R - r | R >= r]; mean_residual_life(0) is the mean.
  double mean_residual_life(long r) const;
  // E[R - r | R > r] = mean_residual_life(r + 1) + 1.
  double mean_residual_life_strict(long r) const;

  // Smallest r with cdf(r) >= u, 0 < u < 1.
  long quantile(double u) const;
  long median() const { return quantile(0.5); }

  // Inverse-transform variates, one per uniform in (0, 1).
  std::vector<long> sample(std::span<const double> uniforms) const;

  // Raw moments by summation over the support up to the first r* with
  // r*^4 * upper_tail_mass(r*) < eps / 100. Throws ConvergenceError when r*
  // would exceed support_cap.
  MomentSummary moments(long support_cap = 1'000'000) const;

  // Split of the continuous range law at integer h.
  RangeSplit split_at(long h) const;

private:
  Horizon T_;
  SeriesControl ctrl_;
  double scale_;
};

}  // namespace wpr
