#pragma once

#include "wprange/ddwpr.hpp"
#include "wprange/moments.hpp"

namespace wpr {

// DDWPR doubly truncated to the integer window [a, b], 0 <= a < b.
//
// The mass function is pmf(r) / xi with xi = cdf(b) - cdf(a) = P[a < R <= b],
// evaluated for r = a..b, and the cdf is (cdf(r) - cdf(a)) / xi. These
// expressions put nonzero mass at r = a while the cdf is zero there, so
//
//   sum_{r=a+1}^{b} pmf(r) = 1   but   sum_{r=a}^{b} pmf(r) = 1 + pmf(a).
//
// Both are kept as written; the conditional law of R given a < R <= b is the
// (a, b] part, which is what make_view() in analytics.hpp exposes.
class Tddwpr {
public:
  // Throws DomainError unless 0 <= a < b and xi > 0.
  Tddwpr(Ddwpr base, long a, long b);

  const Ddwpr& base() const noexcept { return base_; }
  long lower() const noexcept { return a_; }
  long upper() const noexcept { return b_; }
  double normalizer() const noexcept { return xi_; }

  // All of these require a <= r <= b and throw DomainError otherwise.
  double pmf(long r) const;
  double cdf(long r) const;
  double survival(long r) const;  // 1 - cdf(r)

  // pmf(r) / survival(r)
  double hazard(long r) const;
  // pmf(r) / cdf(r)
  double reversed_hazard(long r) const;
  // log(survival(r) / survival(r + 1)), r + 1 <= b
  double second_rate_of_failure(long r) const;

  // sum_{r=a}^{b} r^q pmf(r); total_mass reports 1 + pmf(a).
  MomentSummary moments() const;

private:
  void require_in_window(long r, const char* what) const;

  Ddwpr base_;
  long a_;
  long b_;
  double xi_;
};

}  // namespace wpr
