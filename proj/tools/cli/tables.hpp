#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wprange/series_kernel.hpp"

namespace wpr::cli {

// One reproduced table cell, evaluated with the published pi and exact pi.
struct TableCell {
  std::string table_id;
  double T = 0.0;
  std::optional<long> r;
  std::optional<long> a;
  std::optional<long> b;
  std::string quantity;
  double value = 0.0;        // published pi
  double value_exact = 0.0;  // exact pi
};

using Window = std::pair<long, long>;

// Raw moments mu1p..mu4p, central mu2..mu4, skewness and kurtosis (mu4/mu2^2 - 3)
// for each T; truncated to the window when given (table2), else table1.
std::vector<TableCell> moment_table(const std::vector<double>& Ts, std::optional<Window> window,
                                    const SeriesControl& ctrl);

// f, F and the truncated q, Q per (T, r). Below the window q is pmf / xi and
// Q is 0; above it both are undefined (NaN).
std::vector<TableCell> pmf_table(const std::vector<double>& Ts, const std::vector<long>& rs, Window window,
                                 const SeriesControl& ctrl);

}  // namespace wpr::cli
