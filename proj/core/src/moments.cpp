#include "wprange/moments.hpp"

#include <cmath>

namespace wpr {

MomentSummary summarize_raw_moments(const std::array<double, 4>& raw) {
  MomentSummary out;
  out.raw = raw;
  const double m1 = raw[0], m2 = raw[1], m3 = raw[2], m4 = raw[3];
  const double mu2 = m2 - m1 * m1;
  const double mu3 = m3 - 3.0 * m1 * m2 + 2.0 * m1 * m1 * m1;
  const double mu4 = m4 - 4.0 * m1 * m3 + 6.0 * m1 * m1 * m2 - 3.0 * m1 * m1 * m1 * m1;
  out.central = {mu2, mu3, mu4};
  out.skewness = mu3 / std::pow(mu2, 1.5);
  out.excess_kurtosis = mu4 / (mu2 * mu2) - 3.0;
  return out;
}

}  // namespace wpr
