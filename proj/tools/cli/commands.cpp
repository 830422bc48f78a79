#include "commands.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "golden.hpp"
#include "tables.hpp"
#include "wprange/wprange.hpp"

namespace wpr::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kMaxExpectedDraws = 1e9;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

Cell optional_cell(const std::optional<long>& v) {
  if (v) return static_cast<long long>(*v);
  return std::monostate{};
}

// Evaluates f, mapping an undefined measure to NaN (serialized as "undefined").
double guarded(const std::function<double()>& f) {
  try {
    return f();
  } catch (const UndefinedMeasureError&) {
    return kNaN;
  }
}

void require_range(long lo, long hi, const char* what) {
  if (lo > hi) {
    std::ostringstream msg;
    msg << what << ": --r-min " << lo << " exceeds --r-max " << hi;
    throw UsageError(msg.str());
  }
}

OutputTable deviation_table(const std::vector<TableCell>& cells, const std::vector<GoldenRow>& golden) {
  OutputTable t{{"table_id", "T", "r", "quantity", "value", "paper_value", "rel_deviation", "abs_deviation",
                 "status", "errata_note"},
                {}};
  for (const TableCell& c : cells) {
    const GoldenRow* g = find_golden(golden, c.table_id, c.T, c.r, c.quantity);
    if (!g) continue;
    const double abs_dev = std::abs(c.value - g->paper_value);
    const double rel_dev = g->paper_value != 0.0 ? abs_dev / std::abs(g->paper_value) : kNaN;
    t.add_row({c.table_id, c.T, optional_cell(c.r), c.quantity, c.value, g->paper_value, rel_dev, abs_dev,
               std::string(status_name(judge(*g, c.value))), g->errata_note});
  }
  return t;
}

std::vector<GoldenRow> golden_for(const std::string& path) {
  return load_golden(path.empty() ? default_golden_path() : std::filesystem::path(path));
}

}  // namespace

SeriesControl SeriesArgs::control() const {
  SeriesControl c;
  c.eps = eps;
  c.kmax = kmax;
  c.pi = published_pi ? kPublishedTablePi : std::numbers::pi;
  c.validate();
  return c;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& item : split_list(text)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw UsageError("not a number in list: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<long> parse_int_list(const std::string& text) {
  std::vector<long> out;
  for (const std::string& item : split_list(text)) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw UsageError("not an integer in list: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

long default_oracle_steps(double T) { return T <= 4.0 ? 16'384 : long(std::ceil(16'384.0 * T)); }

CommandResult cmd_dist(const DistArgs& args) {
  if (args.r_min < 0) throw UsageError("dist: --r-min must be >= 0");
  require_range(args.r_min, args.r_max, "dist");
  const Ddwpr d(args.T, args.series.control());
  std::function<double(long)> measure;
  const std::string& m = args.measure;
  if (m == "pmf") measure = [&](long r) { return d.pmf(r); };
  else if (m == "cdf") measure = [&](long r) { return d.cdf(r); };
  else if (m == "survival") measure = [&](long r) { return d.survival(r); };
  else if (m == "hazard") measure = [&](long r) { return d.hazard(r); };
  else if (m == "rhazard") measure = [&](long r) { return d.reversed_hazard(r); };
  else if (m == "srate") measure = [&](long r) { return d.second_rate_of_failure(r); };
  else if (m == "mrl") measure = [&](long r) { return d.mean_residual_life(r); };
  else if (m == "mrl-strict") measure = [&](long r) { return d.mean_residual_life_strict(r); };
  else throw UsageError("dist: unknown measure '" + m + "'");
  CommandResult res{{{"r", m}, {}}, std::nullopt, 0};
  for (long r = args.r_min; r <= args.r_max; ++r) {
    res.table.add_row({static_cast<long long>(r), guarded([&] { return measure(r); })});
  }
  return res;
}

CommandResult cmd_tdist(const TdistArgs& args) {
  const Tddwpr t(Ddwpr(args.T, args.series.control()), args.a, args.b);
  const long lo = args.r_min.value_or(args.a);
  const long hi = args.r_max.value_or(args.b);
  require_range(lo, hi, "tdist");
  if (lo < args.a || hi > args.b) {
    std::ostringstream msg;
    msg << "tdist: r range [" << lo << ", " << hi << "] must lie within [a, b] = [" << args.a << ", "
        << args.b << "]";
    throw UsageError(msg.str());
  }
  std::function<double(long)> measure;
  const std::string& m = args.measure;
  if (m == "pmf") measure = [&](long r) { return t.pmf(r); };
  else if (m == "cdf") measure = [&](long r) { return t.cdf(r); };
  else if (m == "survival") measure = [&](long r) { return t.survival(r); };
  else if (m == "hazard") measure = [&](long r) { return t.hazard(r); };
  else if (m == "rhazard") measure = [&](long r) { return t.reversed_hazard(r); };
  else if (m == "srate") measure = [&](long r) { return t.second_rate_of_failure(r); };
  else throw UsageError("tdist: unknown measure '" + m + "'");
  CommandResult res{{{"r", m}, {}}, std::nullopt, 0};
  for (long r = lo; r <= hi; ++r) {
    res.table.add_row({static_cast<long long>(r), guarded([&] { return measure(r); })});
  }
  return res;
}

CommandResult cmd_table1(const MomentTableArgs& args) {
  if (args.a.has_value() != args.b.has_value()) throw UsageError("table1: give both --a and --b or neither");
  std::optional<Window> window;
  if (args.a) window = Window{*args.a, *args.b};
  const std::vector<double> Ts = parse_real_list(args.T_list.value_or(window ? "15,20,25" : "1,2,3"));
  const auto golden = golden_for(args.golden);
  const auto cells = moment_table(Ts, window, args.series.control());
  CommandResult res{{{"table_id", "T", "a", "b", "quantity", "value", "value_exact_pi"}, {}}, std::nullopt, 0};
  for (const TableCell& c : cells) {
    res.table.add_row({c.table_id, c.T, optional_cell(c.a), optional_cell(c.b), c.quantity, c.value,
                       c.value_exact});
  }
  res.deviations = deviation_table(cells, golden);
  return res;
}

CommandResult cmd_table3(const PmfTableArgs& args) {
  const std::vector<double> Ts = parse_real_list(args.T_list);
  const std::vector<long> rs = parse_int_list(args.r_list);
  for (long r : rs) {
    if (r < 0) throw UsageError("table3: r values must be >= 0");
  }
  const auto golden = golden_for(args.golden);
  const auto cells = pmf_table(Ts, rs, {args.a, args.b}, args.series.control());
  CommandResult res{{{"table_id", "T", "r", "a", "b", "quantity", "value", "value_exact_pi"}, {}}, std::nullopt, 0};
  for (const TableCell& c : cells) {
    res.table.add_row({c.table_id, c.T, optional_cell(c.r), optional_cell(c.a), optional_cell(c.b), c.quantity,
                       c.value, c.value_exact});
  }
  res.deviations = deviation_table(cells, golden);
  return res;
}

CommandResult cmd_sample(const SampleArgs& args) {
  if (args.n <= 0) throw UsageError("sample: --n must be positive");
  if (args.a.has_value() != args.b.has_value()) throw UsageError("sample: give both --a and --b or neither");
  const Ddwpr d(args.T, args.series.control());
  std::optional<Tddwpr> window;
  if (args.a) {
    window.emplace(d, *args.a, *args.b);
    if (double(args.n) / window->normalizer() > kMaxExpectedDraws) {
      std::ostringstream msg;
      msg << "sample: window (" << *args.a << ", " << *args.b << "] has mass " << window->normalizer()
          << "; rejection would need about " << double(args.n) / window->normalizer() << " draws";
      throw ResourceLimitError(msg.str());
    }
  }
  CounterStream stream(args.seed, 0);
  std::vector<long> xs;
  xs.reserve(std::size_t(args.n));
  while (long(xs.size()) < args.n) {
    const long x = d.quantile(stream.uniform());
    if (!window || (x > window->lower() && x <= window->upper())) xs.push_back(x);
  }
  double mean = 0.0, var = 0.0;
  for (long x : xs) mean += double(x);
  mean /= double(xs.size());
  for (long x : xs) var += (double(x) - mean) * (double(x) - mean);
  var = xs.size() > 1 ? var / double(xs.size() - 1) : 0.0;
  CommandResult res{{{"index", "value"}, {}}, std::nullopt, 0};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    res.table.add_row({static_cast<long long>(i), static_cast<long long>(xs[i])});
  }
  res.table.add_row({std::string("mean"), mean});
  res.table.add_row({std::string("variance"), var});
  return res;
}

CommandResult cmd_oracle(const OracleArgs& args) {
  if (args.a.has_value() != args.b.has_value()) throw UsageError("oracle: give both --a and --b or neither");
  if (!(args.alpha > 0.0 && args.alpha < 1.0)) throw UsageError("oracle: --alpha must lie in (0, 1)");
  OracleConfig cfg;
  cfg.T = args.T;
  cfg.paths = args.paths;
  cfg.steps = args.steps.value_or(default_oracle_steps(args.T));
  cfg.seed = args.seed;
  cfg.r_max = args.r_max;
  cfg.workers = args.workers;
  cfg.validate();
  const Ddwpr d(args.T, args.series.control());
  std::optional<Tddwpr> window;
  if (args.a) window.emplace(d, *args.a, *args.b);
  const std::vector<long> xs = simulate_ranges(cfg);
  const CompareOptions opts{cfg.r_max, path_bias_bound(cfg.T, cfg.steps), args.alpha};
  const OracleReport rep = window ? compare_to_analytic(xs, *window, opts) : compare_to_analytic(xs, d, opts);

  CommandResult res{{{"quantity", "value"}, {}}, std::nullopt, rep.pass ? 0 : 1};
  auto add = [&](const std::string& k, Cell v) { res.table.add_row({k, std::move(v)}); };
  add("T", cfg.T);
  add("paths", static_cast<long long>(cfg.paths));
  add("steps", static_cast<long long>(cfg.steps));
  add("seed", static_cast<long long>(cfg.seed));
  add("sample_size", static_cast<long long>(rep.sample_size));
  add("mean", rep.mean);
  add("analytic_mean", rep.analytic_mean);
  add("std_error_mean", rep.std_error_mean);
  add("variance", rep.variance);
  add("third_central", rep.third_central);
  add("fourth_central", rep.fourth_central);
  add("max_abs_cdf_deviation", rep.max_abs_cdf_deviation);
  add("worst_r", static_cast<long long>(rep.worst_r));
  add("dkw_band", rep.dkw_band);
  add("discretization_bias_bound", rep.discretization_bias_bound);
  add("verdict", std::string(rep.pass ? "PASS" : "FAIL"));
  for (const auto& [r, c] : rep.empirical_cdf) {
    const double analytic = window ? window->cdf(r) : d.cdf(r);
    const auto pmf = rep.empirical_pmf.find(r);
    add("empirical_pmf(" + std::to_string(r) + ")", pmf == rep.empirical_pmf.end() ? 0.0 : pmf->second);
    add("empirical_cdf(" + std::to_string(r) + ")", c);
    add("analytic_cdf(" + std::to_string(r) + ")", analytic);
  }
  return res;
}

}  // namespace wpr::cli
