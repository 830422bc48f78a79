#pragma once

#include <array>

namespace wpr {

struct MomentSummary {
  std::array<double, 4> raw{};      // E[R^1] .. E[R^4]
  std::array<double, 3> central{};  // mu_2, mu_3, mu_4
  double skewness = 0.0;            // mu_3 / mu_2^{3/2}
  double excess_kurtosis = 0.0;     // mu_4 / mu_2^2 - 3
  long tail_cutoff_r = 0;           // first r not summed
  double tail_bound = 0.0;          // bound on the omitted fourth-moment mass
  double total_mass = 1.0;          // zeroth moment over the summed range
};

// Fills central moments, skewness and excess kurtosis from raw[] through the
// raw-to-central identities. Central moments are never summed independently.
MomentSummary summarize_raw_moments(const std::array<double, 4>& raw);

}  // namespace wpr
