#pragma once

#include <functional>
#include <optional>

#include "wprange/ddwpr.hpp"
#include "wprange/tddwpr.hpp"

namespace wpr {

// Read-only view of an integer-valued law. cdf_at must be nondecreasing and
// pmf_at(r) must equal cdf_at(r) - cdf_at(r - 1).
struct DiscreteDistView {
  std::function<double(long)> pmf_at;
  std::function<double(long)> cdf_at;
  long support_lo = 0;
  std::optional<long> support_hi;  // nullopt: unbounded above
};

// The DDWPR law itself.
DiscreteDistView make_view(const Ddwpr& dist);

// The conditional law of R given a < R <= b, supported on [a + 1, b]. The
// truncated pmf's extra atom at r = a is excluded so the view is a proper law.
DiscreteDistView make_view(const Tddwpr& dist);

// Rank p of a sample of size n, 1 <= p <= n.
struct OrderStatQuery {
  int n = 1;
  int p = 1;

  // Throws DomainError unless 1 <= p <= n <= 1000.
  void validate() const;
};

// log C(n, k) via lgamma.
double log_binomial(int n, int k);

// P[R_{p:n} <= r] = sum_{i=p}^{n} C(n,i) F^i (1-F)^{n-i}, F = cdf_at(r),
// summed term by term in log space.
double order_stat_cdf(const DiscreteDistView& view, const OrderStatQuery& q, long r);

// P[R_{p:n} = r] = order_stat_cdf(r) - order_stat_cdf(r - 1).
double order_stat_pmf_exact(const DiscreteDistView& view, const OrderStatQuery& q, long r);

// n!/((p-1)!(n-p)!) F^{p-1} (1-F)^{n-p} f at r: the continuous-law formula
// applied to a discrete law. Ignores ties, so it does not sum to 1 in general.
double order_stat_pmf_formula(const DiscreteDistView& view, const OrderStatQuery& q, long r);

// sum_r f_strength(r) F_stress(r) = P[stress <= strength] for independent
// variables, over r up to support_cap. Throws ConvergenceError when either
// law leaves more than 1e-10 of mass beyond the cap.
double stress_strength(const DiscreteDistView& strength, const DiscreteDistView& stress,
                       long support_cap);

}  // namespace wpr
