#include "wprange/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wprange/error.hpp"

namespace wpr {
namespace {

constexpr int kMaxSampleSize = 1000;
constexpr double kTailTolerance = 1e-10;

double clamp_probability(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

DiscreteDistView make_view(const Ddwpr& dist) {
  DiscreteDistView v;
  v.pmf_at = [dist](long r) { return r < 0 ? 0.0 : dist.pmf(r); };
  v.cdf_at = [dist](long r) { return dist.cdf(r); };
  v.support_lo = 0;
  return v;
}

DiscreteDistView make_view(const Tddwpr& dist) {
  DiscreteDistView v;
  const long a = dist.lower();
  const long b = dist.upper();
  v.pmf_at = [dist, a, b](long r) { return (r > a && r <= b) ? dist.pmf(r) : 0.0; };
  v.cdf_at = [dist, a, b](long r) {
    if (r <= a) return 0.0;
    if (r >= b) return 1.0;
    return dist.cdf(r);
  };
  v.support_lo = a + 1;
  v.support_hi = b;
  return v;
}

void OrderStatQuery::validate() const {
  if (n < 1 || n > kMaxSampleSize || p < 1 || p > n) {
    std::ostringstream msg;
    msg << "order statistic query needs 1 <= p <= n <= " << kMaxSampleSize << ", got p = " << p
        << ", n = " << n;
    throw DomainError(msg.str());
  }
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) throw DomainError("log_binomial: k outside [0, n]");
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double order_stat_cdf(const DiscreteDistView& view, const OrderStatQuery& q, long r) {
  q.validate();
  const double F = clamp_probability(view.cdf_at(r));
  if (F <= 0.0) return 0.0;
  if (F >= 1.0) return 1.0;
  const double log_f = std::log(F);
  const double log_g = std::log1p(-F);
  double acc = 0.0;
  for (int i = q.p; i <= q.n; ++i) {
    acc += std::exp(log_binomial(q.n, i) + i * log_f + (q.n - i) * log_g);
  }
  return clamp_probability(acc);
}

double order_stat_pmf_exact(const DiscreteDistView& view, const OrderStatQuery& q, long r) {
  return std::max(order_stat_cdf(view, q, r) - order_stat_cdf(view, q, r - 1), 0.0);
}

double order_stat_pmf_formula(const DiscreteDistView& view, const OrderStatQuery& q, long r) {
  q.validate();
  const double F = clamp_probability(view.cdf_at(r));
  const double f = view.pmf_at(r);
  const double coeff = std::exp(std::lgamma(q.n + 1.0) - std::lgamma(double(q.p)) -
                                std::lgamma(q.n - q.p + 1.0));
  return coeff * std::pow(F, q.p - 1) * std::pow(1.0 - F, q.n - q.p) * f;
}

double stress_strength(const DiscreteDistView& strength, const DiscreteDistView& stress,
                       long support_cap) {
  for (const DiscreteDistView* v : {&strength, &stress}) {
    const double left = 1.0 - v->cdf_at(support_cap);
    if (left > kTailTolerance) {
      std::ostringstream msg;
      msg << "stress_strength: mass " << left << " left beyond support cap " << support_cap;
      throw ConvergenceError(msg.str(), 0.0, left);
    }
  }
  const long lo = std::min(strength.support_lo, stress.support_lo);
  double acc = 0.0;
  for (long r = lo; r <= support_cap; ++r) acc += strength.pmf_at(r) * stress.cdf_at(r);
  return clamp_probability(acc);
}

}  // namespace wpr
