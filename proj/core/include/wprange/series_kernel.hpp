#pragma once

// Series evaluators for the range of a standard Wiener process on (0, T).
//
// Every quantity in the library reduces to the odd-square exponential sum
//
//   S(x) = sum_{k>=1} exp(-(2k-1)^2 x)
//
// and to the cdf series
//
//   P[Rbar(T) <= h] = sum_{k>=1} (8/((2k-1)^2 pi^2) + 8T/h^2) exp(-(2k-1)^2 pi^2 T / (2h^2)),
//
// both of which depend on h and T only through the reduced argument
// x = pi^2 T / (2 h^2). For x >= pi/4 the series above converge after a handful
// of terms. Below that point the evaluators switch to the Jacobi imaginary
// transformation of theta_2,
//
//   S(x)             = sqrt(pi) / (4 sqrt(x)) * (1 + 2 sum_{n>=1} (-1)^n exp(-pi^2 n^2 / (4x)))
//   P[Rbar(T) > h]   = 4 sum_{n>=1} (-1)^{n+1} n erfc(n pi / (2 sqrt(x)))
//
// whose terms decay like exp(-pi^2 n^2 / (4x)). The two regimes meet at the
// self-dual point, so no evaluation needs more than a few terms.
//
// Each evaluator returns the probability below h and its complement as separate
// accurately-computed numbers, so right-tail quantities do not suffer from
// cancellation against 1.

#include <numbers>

namespace wpr {

// Value of pi the published reference tables were evaluated with.
inline constexpr double kPublishedTablePi = 3.14;

struct SeriesControl {
  double eps = 1e-14;  // absolute truncation tolerance on a series tail
  int kmax = 10'000;   // hard cap on terms per series
  // pi as it appears inside the cdf series. Anything other than the exact
  // constant reproduces arithmetic done with a rounded pi; the cdf then tends
  // to (pi / this)^2 rather than 1.
  double pi = std::numbers::pi;

  // Throws DomainError when eps <= 0, kmax < 1 or pi is not positive and finite.
  void validate() const;
};

class Horizon {
public:
  // Throws DomainError unless T is positive and finite.
  explicit Horizon(double T);

  double value() const noexcept { return T_; }

private:
  double T_;
};

// A truncated series: value, number of terms used and the bound on the
// absolute size of everything omitted.
struct SeriesValue {
  double value = 0.0;
  int terms = 0;
  double tail_bound = 0.0;
};

// S(x) = sum_{k>=1} exp(-(2k-1)^2 x), x > 0.
SeriesValue odd_square_exp_sum_detail(double x, const SeriesControl& ctrl = {});
double odd_square_exp_sum(double x, const SeriesControl& ctrl = {});

// theta_2(0, q) = 2 sum_{j>=0} q^{(j+1/2)^2} by direct nome summation, 0 < q < 1.
SeriesValue jacobi_theta2_zero(double q, const SeriesControl& ctrl = {});

// The cdf of the continuous range split into its two complementary pieces,
// computed with exact pi so that below + above = 1.
struct RangeSplit {
  double below = 0.0;  // P[Rbar <= h]
  double above = 1.0;  // P[Rbar > h]
};

// Reduced argument pi_used^2 T / (2 h^2) of the cdf series.
double reduced_argument(double h, Horizon T, const SeriesControl& ctrl);

// Split at h for reduced argument x; h <= 0 yields {0, 1}.
RangeSplit range_split(double h, Horizon T, const SeriesControl& ctrl = {});

// (pi / ctrl.pi)^2: the limit of the cdf series as h -> infinity. Exactly 1
// unless a rounded pi is configured.
double cdf_scale(const SeriesControl& ctrl);

// P[Rbar(T) <= h]. Zero for h <= 0.
double continuous_range_cdf(double h, Horizon T, const SeriesControl& ctrl = {});

// Density of Rbar(T), the h-derivative of continuous_range_cdf. Zero for r <= 0.
double continuous_range_pdf(double r, Horizon T, const SeriesControl& ctrl = {});

}  // namespace wpr
