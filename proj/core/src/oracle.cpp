#include "wprange/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "wprange/error.hpp"
#include "wprange/philox.hpp"

namespace wpr {
namespace {

long simulate_one(double sigma, long steps, std::uint64_t seed, std::uint64_t path) {
  CounterStream stream(seed, path);
  std::array<double, 4> z{};
  double w = 0.0, hi = 0.0, lo = 0.0;
  long done = 0;
  while (done < steps) {
    stream.normals(z);
    const long take = std::min<long>(4, steps - done);
    for (long i = 0; i < take; ++i) {
      w += sigma * z[i];
      hi = std::max(hi, w);
      lo = std::min(lo, w);
    }
    done += take;
  }
  return long(std::floor(hi - lo));
}

struct SampleMoments {
  double mean = 0.0, m2 = 0.0, m3 = 0.0, m4 = 0.0;
};

SampleMoments central_moments(std::span<const long> xs) {
  SampleMoments out;
  const double n = double(xs.size());
  for (long x : xs) out.mean += double(x);
  out.mean /= n;
  for (long x : xs) {
    const double d = double(x) - out.mean;
    const double d2 = d * d;
    out.m2 += d2;
    out.m3 += d2 * d;
    out.m4 += d2 * d2;
  }
  out.m2 /= n;
  out.m3 /= n;
  out.m4 /= n;
  return out;
}

// Fills everything except the analytic comparison.
OracleReport empirical_report(std::span<const long> xs) {
  OracleReport rep;
  rep.sample_size = xs.size();
  const double n = double(xs.size());
  std::map<long, long> counts;
  for (long x : xs) ++counts[x];
  for (const auto& [r, c] : counts) rep.empirical_pmf[r] = double(c) / n;
  const SampleMoments m = central_moments(xs);
  rep.mean = m.mean;
  rep.variance = m.m2;
  rep.third_central = m.m3;
  rep.fourth_central = m.m4;
  rep.std_error_mean = std::sqrt(m.m2 / n);
  return rep;
}

template <class CdfFn>
void compare_cdf(OracleReport& rep, std::span<const long> xs, long r_lo, long r_hi, CdfFn cdf) {
  std::vector<long> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = double(sorted.size());
  for (long r = r_lo; r <= r_hi; ++r) {
    const auto at_most = std::upper_bound(sorted.begin(), sorted.end(), r) - sorted.begin();
    const double emp = double(at_most) / n;
    rep.empirical_cdf[r] = emp;
    const double dev = std::abs(emp - cdf(r));
    if (dev > rep.max_abs_cdf_deviation) {
      rep.max_abs_cdf_deviation = dev;
      rep.worst_r = r;
    }
  }
}

void finish(OracleReport& rep, const CompareOptions& opts) {
  rep.dkw_band = dkw_band(rep.sample_size, opts.alpha);
  rep.discretization_bias_bound = opts.bias_bound;
  rep.pass = rep.max_abs_cdf_deviation <= rep.dkw_band + rep.discretization_bias_bound;
}

}  // namespace

void OracleConfig::validate() const {
  if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("oracle: T must be positive and finite");
  if (paths < 1) throw DomainError("oracle: paths must be >= 1");
  if (steps < 2) throw DomainError("oracle: steps must be >= 2");
  if (r_max < 1) throw DomainError("oracle: r_max must be >= 1");
  if (workers < 1) throw DomainError("oracle: workers must be >= 1");
}

double path_bias_bound(double T, long steps) { return 1.2 * std::sqrt(T / double(steps)); }

double dkw_band(std::size_t n, double alpha) {
  return std::sqrt(std::log(2.0 / alpha) / (2.0 * double(n)));
}

std::vector<long> simulate_ranges(const OracleConfig& cfg) {
  cfg.validate();
  if (double(cfg.paths) * double(cfg.steps) > kMaxPathIncrements) {
    std::ostringstream msg;
    msg << "oracle: " << cfg.paths << " paths x " << cfg.steps
        << " steps exceeds the cap of 1e10 increments";
    throw ResourceLimitError(msg.str());
  }
  const double sigma = std::sqrt(cfg.T / double(cfg.steps));
  std::vector<long> out(std::size_t(cfg.paths));
  const long workers = std::min<long>(cfg.workers, cfg.paths);
  const long chunk = (cfg.paths + workers - 1) / workers;
  auto run = [&](long begin, long end) {
    for (long i = begin; i < end; ++i) {
      out[std::size_t(i)] = simulate_one(sigma, cfg.steps, cfg.seed, std::uint64_t(i));
    }
  };
  if (workers == 1) {
    run(0, cfg.paths);
    return out;
  }
  std::vector<std::jthread> pool;
  for (long w = 0; w < workers; ++w) {
    const long begin = w * chunk;
    const long end = std::min(cfg.paths, begin + chunk);
    if (begin < end) pool.emplace_back(run, begin, end);
  }
  pool.clear();  // joins
  return out;
}

OracleReport compare_to_analytic(std::span<const long> sample, const Ddwpr& dist,
                                 const CompareOptions& opts) {
  if (sample.empty()) throw DomainError("compare_to_analytic: empty sample");
  OracleReport rep = empirical_report(sample);
  rep.analytic_mean = dist.moments().raw[0];
  compare_cdf(rep, sample, 0, opts.r_max, [&](long r) { return dist.cdf(r); });
  finish(rep, opts);
  return rep;
}

OracleReport compare_to_analytic(std::span<const long> sample, const Tddwpr& dist,
                                 const CompareOptions& opts) {
  if (sample.empty()) throw DomainError("compare_to_analytic: empty sample");
  std::vector<long> kept;
  for (long x : sample) {
    if (x > dist.lower() && x <= dist.upper()) kept.push_back(x);
  }
  if (kept.empty()) throw DomainError("compare_to_analytic: no draw fell inside (a, b]");
  OracleReport rep = empirical_report(kept);
  double mean = 0.0;
  for (long r = dist.lower() + 1; r <= dist.upper(); ++r) mean += double(r) * dist.pmf(r);
  rep.analytic_mean = mean;
  compare_cdf(rep, kept, dist.lower(), dist.upper(), [&](long r) { return dist.cdf(r); });
  finish(rep, opts);
  return rep;
}

}  // namespace wpr
