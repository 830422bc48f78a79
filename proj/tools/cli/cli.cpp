#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <json.hpp>

#include "commands.hpp"
#include "golden.hpp"
#include "wprange/error.hpp"

namespace wpr::cli {
namespace {

struct OutputArgs {
  std::string format = "csv";
  std::string out;
};

void add_series_flags(CLI::App* sub, SeriesArgs& s) {
  sub->add_option("--eps", s.eps, "Series truncation tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--kmax", s.kmax, "Maximum terms per series")->check(CLI::PositiveNumber);
}

void add_output_flags(CLI::App* sub, OutputArgs& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", o.out, "Write to this file instead of stdout");
}

// Every option of the subcommand with its effective value. --workers is left
// out because it cannot change the output.
nlohmann::json flag_echo(const CLI::App* sub) {
  nlohmann::json flags = nlohmann::json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string name = opt->get_name();
    if (name == "--help" || name == "--workers") continue;
    if (opt->get_expected_min() == 0) {
      flags[name] = opt->count() > 0;
    } else if (opt->count() > 0) {
      flags[name] = opt->as<std::string>();
    } else if (!opt->get_default_str().empty()) {
      flags[name] = opt->get_default_str();
    } else {
      flags[name] = nullptr;
    }
  }
  return flags;
}

void emit(const CommandResult& res, const OutputArgs& o, const nlohmann::json& meta, std::ostream& out) {
  std::string text;
  if (o.format == "json") {
    nlohmann::json j = to_json(res.table);
    j["meta"] = meta;
    if (res.deviations) j["deviations"] = to_json(*res.deviations);
    text = j.dump(2) + "\n";
  } else {
    text = to_csv(res.table);
    if (res.deviations) text += "\n" + to_csv(*res.deviations);
  }
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + o.out);
  file << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete distribution of the Wiener process range", "wprange"};
  app.set_version_flag("--version", std::string("wprange ") + WPRANGE_VERSION);
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  OutputArgs o;
  std::uint64_t seed_echo = 0;
  bool has_seed = false;
  std::function<CommandResult()> action;

  DistArgs dist;
  auto* s_dist = app.add_subcommand("dist", "DDWPR measures over a range of r");
  s_dist->add_option("--T", dist.T, "Horizon")->required();
  s_dist->add_option("--measure", dist.measure, "Measure")
      ->check(CLI::IsMember({"pmf", "cdf", "survival", "hazard", "rhazard", "srate", "mrl", "mrl-strict"}));
  s_dist->add_option("--r-min", dist.r_min, "First r");
  s_dist->add_option("--r-max", dist.r_max, "Last r");
  s_dist->add_flag("--published-pi", dist.series.published_pi, "Evaluate with pi = 3.14");
  add_series_flags(s_dist, dist.series);
  add_output_flags(s_dist, o);
  s_dist->callback([&] { action = [&] { return cmd_dist(dist); }; });

  TdistArgs tdist;
  auto* s_tdist = app.add_subcommand("tdist", "Doubly truncated DDWPR measures on [a, b]");
  s_tdist->add_option("--T", tdist.T, "Horizon")->required();
  s_tdist->add_option("--a", tdist.a, "Lower truncation bound")->required();
  s_tdist->add_option("--b", tdist.b, "Upper truncation bound")->required();
  s_tdist->add_option("--measure", tdist.measure, "Measure")
      ->check(CLI::IsMember({"pmf", "cdf", "survival", "hazard", "rhazard", "srate"}));
  s_tdist->add_option("--r-min", tdist.r_min, "First r (default a)");
  s_tdist->add_option("--r-max", tdist.r_max, "Last r (default b)");
  s_tdist->add_flag("--published-pi", tdist.series.published_pi, "Evaluate with pi = 3.14");
  add_series_flags(s_tdist, tdist.series);
  add_output_flags(s_tdist, o);
  s_tdist->callback([&] { action = [&] { return cmd_tdist(tdist); }; });

  MomentTableArgs t1;
  auto* s_t1 = app.add_subcommand("table1", "Moment table; with --a/--b the truncated moment table");
  s_t1->add_option("--T-list", t1.T_list, "Comma-separated horizons (default 1,2,3 or 15,20,25)");
  s_t1->add_option("--a", t1.a, "Lower truncation bound");
  s_t1->add_option("--b", t1.b, "Upper truncation bound");
  s_t1->add_option("--golden", t1.golden, "Golden data CSV (default: bundled)");
  add_series_flags(s_t1, t1.series);
  add_output_flags(s_t1, o);
  s_t1->callback([&] { action = [&] { return cmd_table1(t1); }; });

  PmfTableArgs t3;
  auto* s_t3 = app.add_subcommand("table3", "pmf/cdf table for DDWPR and TDDWPR");
  s_t3->add_option("--T-list", t3.T_list, "Comma-separated horizons");
  s_t3->add_option("--r-list", t3.r_list, "Comma-separated r values");
  s_t3->add_option("--a", t3.a, "Lower truncation bound");
  s_t3->add_option("--b", t3.b, "Upper truncation bound");
  s_t3->add_option("--golden", t3.golden, "Golden data CSV (default: bundled)");
  add_series_flags(s_t3, t3.series);
  add_output_flags(s_t3, o);
  s_t3->callback([&] { action = [&] { return cmd_table3(t3); }; });

  SampleArgs smp;
  auto* s_smp = app.add_subcommand("sample", "Inverse-transform DDWPR variates");
  s_smp->add_option("--T", smp.T, "Horizon")->required();
  s_smp->add_option("--n", smp.n, "Number of variates")->required();
  s_smp->add_option("--seed", smp.seed, "Seed");
  s_smp->add_option("--a", smp.a, "Lower truncation bound (keeps a < R <= b)");
  s_smp->add_option("--b", smp.b, "Upper truncation bound");
  s_smp->add_flag("--published-pi", smp.series.published_pi, "Evaluate with pi = 3.14");
  add_series_flags(s_smp, smp.series);
  add_output_flags(s_smp, o);
  s_smp->callback([&] {
    has_seed = true;
    seed_echo = smp.seed;
    action = [&] { return cmd_sample(smp); };
  });

  OracleArgs orc;
  auto* s_orc = app.add_subcommand("oracle", "Compare simulated Wiener ranges with the analytic law");
  s_orc->add_option("--T", orc.T, "Horizon");
  s_orc->add_option("--paths", orc.paths, "Simulated paths");
  s_orc->add_option("--steps", orc.steps, "Increments per path (default 16384, times T above T = 4)");
  s_orc->add_option("--seed", orc.seed, "Seed");
  s_orc->add_option("--r-max", orc.r_max, "Largest r in the cdf comparison");
  s_orc->add_option("--workers", orc.workers, "Worker threads (output does not depend on this)");
  s_orc->add_option("--alpha", orc.alpha, "DKW band significance level");
  s_orc->add_option("--a", orc.a, "Lower truncation bound (compare on the window)");
  s_orc->add_option("--b", orc.b, "Upper truncation bound");
  s_orc->add_flag("--published-pi", orc.series.published_pi, "Evaluate with pi = 3.14");
  add_series_flags(s_orc, orc.series);
  add_output_flags(s_orc, o);
  s_orc->callback([&] {
    has_seed = true;
    seed_echo = orc.seed;
    action = [&] { return cmd_oracle(orc); };
  });

  try {
    app.parse(argc, argv);
    const CLI::App* sub = app.get_subcommands().front();
    nlohmann::json meta{{"tool", "wprange"},
                        {"version", WPRANGE_VERSION},
                        {"command", sub->get_name()},
                        {"flags", flag_echo(sub)},
                        {"seed", has_seed ? nlohmann::json(seed_echo) : nlohmann::json(nullptr)}};
    const CommandResult res = action();
    emit(res, o, meta, out);
    return res.exit_code;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << "wprange " << WPRANGE_VERSION << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace wpr::cli
