#include "wprange/ddwpr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "wprange/error.hpp"

namespace wpr {
namespace {

constexpr long kMrlTermCap = 10'000'000;
constexpr long kQuantileSearchCap = 1L << 40;

// P[lo < Rbar <= hi] for splits taken at lo and hi, choosing whichever
// representation keeps the difference away from 1.
double split_difference(const RangeSplit& lo, const RangeSplit& hi) {
  const double d = (hi.below <= 0.5) ? hi.below - lo.below : lo.above - hi.above;
  return std::max(d, 0.0);
}

void require_nonnegative(long r, const char* what) {
  if (r < 0) {
    std::ostringstream msg;
    msg << what << ": r must be >= 0, got " << r;
    throw DomainError(msg.str());
  }
}

[[noreturn]] void throw_undefined(const char* what, long r, double denom) {
  std::ostringstream msg;
  msg << what << " undefined at r = " << r << " (denominator " << denom << ")";
  throw UndefinedMeasureError(msg.str());
}

}  // namespace

Ddwpr::Ddwpr(double T, SeriesControl ctrl) : T_(T), ctrl_(ctrl), scale_(0.0) {
  ctrl_.validate();
  scale_ = cdf_scale(ctrl_);
}

RangeSplit Ddwpr::split_at(long h) const { return range_split(double(h), T_, ctrl_); }

double Ddwpr::interval_mass(long lo, long hi) const {
  if (hi <= lo) return 0.0;
  return scale_ * split_difference(split_at(lo + 1), split_at(hi + 1));
}

double Ddwpr::pmf(long r) const {
  require_nonnegative(r, "pmf");
  return interval_mass(r - 1, r);
}

double Ddwpr::cdf(long r) const {
  if (r < 0) return 0.0;
  return scale_ * split_at(r + 1).below;
}

double Ddwpr::survival(long r) const {
  if (r <= 0) return 1.0;
  const RangeSplit s = split_at(r);
  // With exact pi the complement is available without cancellation.
  if (scale_ == 1.0) return s.above;
  return 1.0 - scale_ * s.below;
}

double Ddwpr::upper_tail_mass(long r) const {
  if (r <= 0) return scale_;
  return scale_ * split_at(r).above;
}

double Ddwpr::hazard(long r) const {
  require_nonnegative(r, "hazard");
  const double s = survival(r);
  if (s <= ctrl_.eps) throw_undefined("hazard", r, s);
  return pmf(r) / s;
}

double Ddwpr::reversed_hazard(long r) const {
  require_nonnegative(r, "reversed_hazard");
  const double f = cdf(r);
  if (f <= 0.0) throw_undefined("reversed_hazard", r, f);
  return pmf(r) / f;
}

double Ddwpr::second_rate_of_failure(long r) const {
  require_nonnegative(r, "second_rate_of_failure");
  const double next = survival(r + 1);
  if (next <= ctrl_.eps) throw_undefined("second_rate_of_failure", r, next);
  return std::log(survival(r) / next);
}

double Ddwpr::mean_residual_life(long r) const {
  require_nonnegative(r, "mean_residual_life");
  const double s = survival(r);
  if (s <= ctrl_.eps) throw_undefined("mean_residual_life", r, s);
  // sum_{j>=r} (j - r) pmf(j) = sum_{j>r} upper_tail_mass(j)
  const double stop = ctrl_.eps * 1e-2 * s;
  double acc = 0.0;
  double prev = upper_tail_mass(r);
  for (long j = r + 1; j - r <= kMrlTermCap; ++j) {
    const double t = upper_tail_mass(j);
    acc += t;
    const double ratio = prev > 0.0 ? t / prev : 0.0;
    if (t == 0.0 || (t < stop && ratio < 0.5)) return acc / s;
    prev = t;
  }
  throw ConvergenceError("mean_residual_life: term cap reached", acc / s, prev / s);
}

double Ddwpr::mean_residual_life_strict(long r) const {
  require_nonnegative(r, "mean_residual_life_strict");
  return mean_residual_life(r + 1) + 1.0;
}

long Ddwpr::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) {
    std::ostringstream msg;
    msg << "quantile: u must lie in (0, 1), got " << u;
    throw DomainError(msg.str());
  }
  if (cdf(0) >= u) return 0;
  long lo = 0;  // cdf(lo) < u
  long hi = 1;
  while (cdf(hi) < u) {
    lo = hi;
    hi *= 2;
    if (hi > kQuantileSearchCap) {
      throw ConvergenceError("quantile: cdf never reaches u", cdf(lo), 1.0 - cdf(lo));
    }
  }
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    if (cdf(mid) >= u) hi = mid;
    else lo = mid;
  }
  return hi;
}

std::vector<long> Ddwpr::sample(std::span<const double> uniforms) const {
  std::vector<long> out;
  out.reserve(uniforms.size());
  for (std::size_t i = 0; i < uniforms.size(); ++i) {
    const double u = uniforms[i];
    if (!(u > 0.0 && u < 1.0)) {
      std::ostringstream msg;
      msg << "sample: uniform at index " << i << " is " << u << ", outside (0, 1)";
      throw DomainError(msg.str());
    }
    out.push_back(quantile(u));
  }
  return out;
}

MomentSummary Ddwpr::moments(long support_cap) const {
  std::array<double, 4> raw{};
  double mass = 0.0;
  const double stop = ctrl_.eps * 1e-2;
  RangeSplit lower = split_at(0);
  for (long r = 0;; ++r) {
    if (r >= 1) {
      const double r4 = std::pow(double(r), 4);
      const double tail = scale_ * lower.above;
      if (r4 * tail < stop) {
        MomentSummary out = summarize_raw_moments(raw);
        out.tail_cutoff_r = r;
        // Past the cutoff r^4 * tail(r) decays faster than geometrically with
        // ratio below 1/2, so twice the first omitted bound covers the rest.
        out.tail_bound = 2.0 * r4 * tail;
        out.total_mass = mass;
        return out;
      }
    }
    if (r >= support_cap) {
      throw ConvergenceError("moments: support cap reached before the tail bound met tolerance",
                             raw[0], std::pow(double(r), 4) * scale_ * lower.above);
    }
    const RangeSplit upper = split_at(r + 1);
    const double p = scale_ * split_difference(lower, upper);
    mass += p;
    double rq = 1.0;
    for (double& m : raw) {
      rq *= double(r);
      m += rq * p;
    }
    lower = upper;
  }
}

}  // namespace wpr
