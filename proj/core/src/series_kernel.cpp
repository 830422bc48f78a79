#include "wprange/series_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wprange/error.hpp"

namespace wpr {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;

// Reduced arguments below this use the transformed (dual) series. pi/4 is the
// fixed point of x -> pi^2 / (16 x), where both forms decay equally fast.
constexpr double kDualSwitch = kPi / 4.0;

[[noreturn]] void throw_unconverged(const char* what, double x, const SeriesValue& partial) {
  std::ostringstream msg;
  msg << what << ": term cap " << partial.terms << " reached at x = " << x
      << " (partial sum " << partial.value << ", tail bound " << partial.tail_bound << ")";
  throw ConvergenceError(msg.str(), partial.value, partial.tail_bound);
}

void require_positive_finite(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream msg;
    msg << what << " must be positive and finite, got " << v;
    throw DomainError(msg.str());
  }
}

// sum_{k>=1} exp(-(2k-1)^2 x) term by term.
SeriesValue odd_square_direct(double x, const SeriesControl& ctrl) {
  SeriesValue out;
  for (int k = 1;; ++k) {
    const double m = (2.0 * k - 1.0) * (2.0 * k - 1.0);
    out.value += std::exp(-m * x);
    out.terms = k;
    const double next_m = (2.0 * k + 1.0) * (2.0 * k + 1.0);
    const double next = std::exp(-next_m * x);
    // Successive term ratios shrink, so the tail is a sub-geometric series
    // with leading ratio exp(-8(k+1)x).
    out.tail_bound = next / -std::expm1(-8.0 * (k + 1) * x);
    if (next < ctrl.eps) return out;
    if (k >= ctrl.kmax) throw_unconverged("odd_square_exp_sum", x, out);
  }
}

// sqrt(pi)/(4 sqrt(x)) * (1 + 2 sum_{n>=1} (-1)^n exp(-pi^2 n^2 / (4x))).
SeriesValue odd_square_dual(double x, const SeriesControl& ctrl) {
  const double pre = kSqrtPi / (4.0 * std::sqrt(x));
  const double c = kPi * kPi / (4.0 * x);
  double acc = 1.0;
  SeriesValue out;
  for (int n = 1;; ++n) {
    const double t = 2.0 * std::exp(-c * n * n);
    acc += (n % 2 == 1) ? -t : t;
    out.terms = n;
    const double next = pre * 2.0 * std::exp(-c * (n + 1.0) * (n + 1.0));
    out.tail_bound = next;  // alternating with decreasing magnitude
    if (next < ctrl.eps) break;
    if (n >= ctrl.kmax) {
      out.value = pre * acc;
      throw_unconverged("odd_square_exp_sum", x, out);
    }
  }
  out.value = pre * acc;
  return out;
}

// Phi(x) = sum_{k>=1} (8/(m pi^2) + 16x/pi^2) exp(-m x), m = (2k-1)^2.
SeriesValue cdf_direct(double x, const SeriesControl& ctrl) {
  const double a = 8.0 / (kPi * kPi);
  const double b = 16.0 * x / (kPi * kPi);
  SeriesValue out;
  for (int k = 1;; ++k) {
    const double m = (2.0 * k - 1.0) * (2.0 * k - 1.0);
    out.value += (a / m + b) * std::exp(-m * x);
    out.terms = k;
    const double next_m = (2.0 * k + 1.0) * (2.0 * k + 1.0);
    const double next = (a + b) * std::exp(-next_m * x);
    out.tail_bound = next / -std::expm1(-8.0 * (k + 1) * x);
    if (next < ctrl.eps) return out;
    if (k >= ctrl.kmax) throw_unconverged("continuous_range_cdf", x, out);
  }
}

// 1 - Phi(x) = 4 sum_{n>=1} (-1)^{n+1} n erfc(n pi / (2 sqrt(x))).
SeriesValue cdf_complement_dual(double x, const SeriesControl& ctrl) {
  const double arg = kPi / (2.0 * std::sqrt(x));
  SeriesValue out;
  for (int n = 1;; ++n) {
    const double t = 4.0 * n * std::erfc(n * arg);
    out.value += (n % 2 == 1) ? t : -t;
    out.terms = n;
    const double next = 4.0 * (n + 1) * std::erfc((n + 1) * arg);
    out.tail_bound = next;
    if (next < ctrl.eps) return out;
    if (n >= ctrl.kmax) throw_unconverged("continuous_range_cdf", x, out);
  }
}

// sum_{k>=1} (2 m x - 1) exp(-m x); the density is 16x/(pi^2 h) times this.
double pdf_direct_sum(double x, const SeriesControl& ctrl) {
  double acc = 0.0;
  for (int k = 1;; ++k) {
    const double m = (2.0 * k - 1.0) * (2.0 * k - 1.0);
    acc += (2.0 * m * x - 1.0) * std::exp(-m * x);
    const double next_m = (2.0 * k + 1.0) * (2.0 * k + 1.0);
    const double next = (2.0 * next_m * x + 1.0) * std::exp(-next_m * x);
    if (next < ctrl.eps) return acc;
    if (k >= ctrl.kmax) {
      throw_unconverged("continuous_range_pdf", x, SeriesValue{acc, k, next});
    }
  }
}

// sum_{n>=1} (-1)^{n+1} n^2 exp(-n^2 a^2); the density is 8a/(h sqrt(pi)) times this.
double pdf_dual_sum(double a, const SeriesControl& ctrl) {
  double acc = 0.0;
  for (int n = 1;; ++n) {
    const double t = double(n) * n * std::exp(-double(n) * n * a * a);
    acc += (n % 2 == 1) ? t : -t;
    const double np1 = n + 1.0;
    const double next = np1 * np1 * std::exp(-np1 * np1 * a * a);
    if (next < ctrl.eps) return acc;
    if (n >= ctrl.kmax) {
      throw_unconverged("continuous_range_pdf", a, SeriesValue{acc, n, next});
    }
  }
}

}  // namespace

void SeriesControl::validate() const {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw DomainError("SeriesControl.eps must be positive and finite");
  }
  if (kmax < 1) throw DomainError("SeriesControl.kmax must be at least 1");
  if (!(pi > 0.0) || !std::isfinite(pi)) {
    throw DomainError("SeriesControl.pi must be positive and finite");
  }
}

Horizon::Horizon(double T) : T_(T) { require_positive_finite(T, "horizon T"); }

SeriesValue odd_square_exp_sum_detail(double x, const SeriesControl& ctrl) {
  require_positive_finite(x, "odd_square_exp_sum argument x");
  ctrl.validate();
  return x >= kDualSwitch ? odd_square_direct(x, ctrl) : odd_square_dual(x, ctrl);
}

double odd_square_exp_sum(double x, const SeriesControl& ctrl) {
  return odd_square_exp_sum_detail(x, ctrl).value;
}

SeriesValue jacobi_theta2_zero(double q, const SeriesControl& ctrl) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("jacobi_theta2_zero: nome must lie in (0, 1)");
  ctrl.validate();
  const double log_q = std::log(q);
  // Near q = 1 this sums hundreds of comparable terms; accumulate wide.
  long double acc = 0.0L;
  SeriesValue out;
  for (int j = 0;; ++j) {
    const double e = (j + 0.5) * (j + 0.5);
    acc += 2.0L * std::exp(static_cast<long double>(e) * log_q);
    out.terms = j + 1;
    out.value = static_cast<double>(acc);
    const double next_e = (j + 1.5) * (j + 1.5);
    const double next = 2.0 * std::exp(next_e * log_q);
    out.tail_bound = next / -std::expm1(2.0 * (j + 2) * log_q);
    if (next < ctrl.eps) return out;
    if (out.terms >= ctrl.kmax) {
      throw ConvergenceError("jacobi_theta2_zero: term cap reached", out.value, out.tail_bound);
    }
  }
}

double reduced_argument(double h, Horizon T, const SeriesControl& ctrl) {
  return ctrl.pi * ctrl.pi * T.value() / (2.0 * h * h);
}

double cdf_scale(const SeriesControl& ctrl) {
  const double ratio = kPi / ctrl.pi;
  return ratio * ratio;
}

RangeSplit range_split(double h, Horizon T, const SeriesControl& ctrl) {
  if (!std::isfinite(h)) throw DomainError("range_split: h must be finite");
  ctrl.validate();
  if (h <= 0.0) return {0.0, 1.0};
  const double x = reduced_argument(h, T, ctrl);
  RangeSplit out;
  if (x >= kDualSwitch) {
    out.below = std::clamp(cdf_direct(x, ctrl).value, 0.0, 1.0);
    out.above = 1.0 - out.below;
  } else {
    out.above = std::clamp(cdf_complement_dual(x, ctrl).value, 0.0, 1.0);
    out.below = 1.0 - out.above;
  }
  return out;
}

double continuous_range_cdf(double h, Horizon T, const SeriesControl& ctrl) {
  return cdf_scale(ctrl) * range_split(h, T, ctrl).below;
}

double continuous_range_pdf(double r, Horizon T, const SeriesControl& ctrl) {
  if (!std::isfinite(r)) throw DomainError("continuous_range_pdf: r must be finite");
  ctrl.validate();
  if (r <= 0.0) return 0.0;
  const double x = reduced_argument(r, T, ctrl);
  const double scale = cdf_scale(ctrl);
  double density;
  if (x >= kDualSwitch) {
    density = scale * 16.0 * x / (kPi * kPi * r) * pdf_direct_sum(x, ctrl);
  } else {
    const double a = kPi / (2.0 * std::sqrt(x));
    density = scale * 8.0 * a / (r * kSqrtPi) * pdf_dual_sum(a, ctrl);
  }
  return std::max(density, 0.0);
}

}  // namespace wpr
