#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "output_table.hpp"
#include "wprange/series_kernel.hpp"

namespace wpr::cli {

// Bad flag values or combinations; reported with exit code 2.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct SeriesArgs {
  double eps = 1e-14;
  int kmax = 10'000;
  bool published_pi = false;  // evaluate with pi = 3.14 as the printed tables do

  SeriesControl control() const;
};

struct DistArgs {
  double T = 0.0;
  std::string measure = "pmf";  // pmf|cdf|survival|hazard|rhazard|srate|mrl|mrl-strict
  long r_min = 0;
  long r_max = 20;
  SeriesArgs series;
};

struct TdistArgs {
  double T = 0.0;
  long a = 0;
  long b = 0;
  std::string measure = "pmf";  // pmf|cdf|survival|hazard|rhazard|srate
  std::optional<long> r_min;    // default a
  std::optional<long> r_max;    // default b
  SeriesArgs series;
};

struct MomentTableArgs {
  std::optional<std::string> T_list;  // default 1,2,3 (or 15,20,25 with a window)
  std::optional<long> a;
  std::optional<long> b;
  std::string golden;  // empty: bundled file
  SeriesArgs series;
};

struct PmfTableArgs {
  std::string T_list = "25,50,75,100";
  std::string r_list = "1,2,3,4,5,9,10";
  long a = 3;
  long b = 10;
  std::string golden;
  SeriesArgs series;
};

struct SampleArgs {
  double T = 0.0;
  long n = 0;
  std::uint64_t seed = 7;
  std::optional<long> a;
  std::optional<long> b;
  SeriesArgs series;
};

struct OracleArgs {
  double T = 1.0;
  long paths = 100'000;
  std::optional<long> steps;  // default 16384, scaled by T above T = 4
  std::uint64_t seed = 7;
  long r_max = 20;
  int workers = 1;
  double alpha = 0.01;
  std::optional<long> a;
  std::optional<long> b;
  SeriesArgs series;
};

struct CommandResult {
  OutputTable table;
  std::optional<OutputTable> deviations;  // table commands: analytic vs golden
  int exit_code = 0;
};

CommandResult cmd_dist(const DistArgs& args);
CommandResult cmd_tdist(const TdistArgs& args);
CommandResult cmd_table1(const MomentTableArgs& args);
CommandResult cmd_table3(const PmfTableArgs& args);
CommandResult cmd_sample(const SampleArgs& args);
CommandResult cmd_oracle(const OracleArgs& args);

// Comma-separated lists; blank input yields an empty list.
std::vector<double> parse_real_list(const std::string& text);
std::vector<long> parse_int_list(const std::string& text);

long default_oracle_steps(double T);

}  // namespace wpr::cli
