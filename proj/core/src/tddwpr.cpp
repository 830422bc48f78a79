#include "wprange/tddwpr.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "wprange/error.hpp"

namespace wpr {
namespace {

[[noreturn]] void throw_undefined(const char* what, long r, double denom) {
  std::ostringstream msg;
  msg << what << " undefined at r = " << r << " (denominator " << denom << ")";
  throw UndefinedMeasureError(msg.str());
}

}  // namespace

Tddwpr::Tddwpr(Ddwpr base, long a, long b) : base_(std::move(base)), a_(a), b_(b), xi_(0.0) {
  if (a < 0 || a >= b) {
    std::ostringstream msg;
    msg << "truncation bounds must satisfy 0 <= a < b, got a = " << a << ", b = " << b;
    throw DomainError(msg.str());
  }
  xi_ = base_.interval_mass(a_, b_);
  if (!(xi_ > 0.0)) {
    std::ostringstream msg;
    msg << "truncation window (" << a << ", " << b << "] carries no mass at T = "
        << base_.horizon();
    throw DomainError(msg.str());
  }
}

void Tddwpr::require_in_window(long r, const char* what) const {
  if (r < a_ || r > b_) {
    std::ostringstream msg;
    msg << what << ": r = " << r << " outside [" << a_ << ", " << b_ << "]";
    throw DomainError(msg.str());
  }
}

double Tddwpr::pmf(long r) const {
  require_in_window(r, "truncated pmf");
  return base_.pmf(r) / xi_;
}

double Tddwpr::cdf(long r) const {
  require_in_window(r, "truncated cdf");
  return base_.interval_mass(a_, r) / xi_;
}

double Tddwpr::survival(long r) const {
  require_in_window(r, "truncated survival");
  return 1.0 - cdf(r);
}

double Tddwpr::hazard(long r) const {
  require_in_window(r, "truncated hazard");
  const double s = survival(r);
  if (s <= base_.control().eps) throw_undefined("truncated hazard", r, s);
  return pmf(r) / s;
}

double Tddwpr::reversed_hazard(long r) const {
  require_in_window(r, "truncated reversed hazard");
  const double f = cdf(r);
  if (f <= 0.0) throw_undefined("truncated reversed hazard", r, f);
  return pmf(r) / f;
}

double Tddwpr::second_rate_of_failure(long r) const {
  require_in_window(r, "truncated second rate");
  if (r + 1 > b_) throw_undefined("truncated second rate", r, 0.0);
  const double next = survival(r + 1);
  if (next <= base_.control().eps) throw_undefined("truncated second rate", r, next);
  return std::log(survival(r) / next);
}

MomentSummary Tddwpr::moments() const {
  std::array<double, 4> raw{};
  double mass = 0.0;
  for (long r = a_; r <= b_; ++r) {
    const double p = pmf(r);
    mass += p;
    double rq = 1.0;
    for (double& m : raw) {
      rq *= double(r);
      m += rq * p;
    }
  }
  MomentSummary out = summarize_raw_moments(raw);
  out.tail_cutoff_r = b_ + 1;
  out.tail_bound = 0.0;
  out.total_mass = mass;
  return out;
}

}  // namespace wpr
