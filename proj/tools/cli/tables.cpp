#include "tables.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "wprange/tddwpr.hpp"

namespace wpr::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

SeriesControl with_pi(SeriesControl c, double pi) {
  c.pi = pi;
  return c;
}

std::vector<std::pair<std::string, double>> moment_fields(const MomentSummary& m) {
  return {{"mu1p", m.raw[0]},     {"mu2p", m.raw[1]},     {"mu3p", m.raw[2]},
          {"mu4p", m.raw[3]},     {"mu2", m.central[0]},  {"mu3", m.central[1]},
          {"mu4", m.central[2]},  {"skewness", m.skewness}, {"kurtosis", m.excess_kurtosis}};
}

MomentSummary moments_for(double T, std::optional<Window> window, const SeriesControl& ctrl) {
  const Ddwpr d(T, ctrl);
  if (!window) return d.moments();
  return Tddwpr(d, window->first, window->second).moments();
}

struct PmfRow {
  double f, F, q, Q;
};

PmfRow pmf_row(const Tddwpr& t, long r) {
  const Ddwpr& d = t.base();
  PmfRow row{d.pmf(r), d.cdf(r), kNaN, kNaN};
  if (r < t.lower()) {
    row.q = row.f / t.normalizer();
    row.Q = 0.0;
  } else if (r <= t.upper()) {
    row.q = t.pmf(r);
    row.Q = t.cdf(r);
  }
  return row;
}

}  // namespace

std::vector<TableCell> moment_table(const std::vector<double>& Ts, std::optional<Window> window,
                                    const SeriesControl& ctrl) {
  std::vector<TableCell> out;
  const std::string id = window ? "table2" : "table1";
  for (double T : Ts) {
    const auto pub = moment_fields(moments_for(T, window, with_pi(ctrl, kPublishedTablePi)));
    const auto exact = moment_fields(moments_for(T, window, with_pi(ctrl, std::numbers::pi)));
    for (std::size_t i = 0; i < pub.size(); ++i) {
      TableCell c{id, T, std::nullopt, std::nullopt, std::nullopt, pub[i].first, pub[i].second,
                  exact[i].second};
      if (window) {
        c.a = window->first;
        c.b = window->second;
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<TableCell> pmf_table(const std::vector<double>& Ts, const std::vector<long>& rs, Window window,
                                 const SeriesControl& ctrl) {
  std::vector<TableCell> out;
  for (double T : Ts) {
    const Tddwpr pub(Ddwpr(T, with_pi(ctrl, kPublishedTablePi)), window.first, window.second);
    const Tddwpr exact(Ddwpr(T, with_pi(ctrl, std::numbers::pi)), window.first, window.second);
    for (long r : rs) {
      const PmfRow p = pmf_row(pub, r), e = pmf_row(exact, r);
      const std::optional<long> none;
      out.push_back({"table3", T, r, none, none, "f", p.f, e.f});
      out.push_back({"table3", T, r, none, none, "F", p.F, e.F});
      out.push_back({"table3", T, r, window.first, window.second, "q", p.q, e.q});
      out.push_back({"table3", T, r, window.first, window.second, "Q", p.Q, e.Q});
    }
  }
  return out;
}

}  // namespace wpr::cli
