#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace wpr::cli {

// A cell is empty, text, an integer, or a real serialized with 10 significant
// digits. Empty cells are blank in CSV and null in JSON.
using Cell = std::variant<std::monostate, std::string, long long, double>;

inline const std::string kUndefined = "undefined";

struct OutputTable {
  std::vector<std::string> headers;
  std::vector<std::vector<Cell>> rows;

  // Throws std::logic_error when the row length differs from the header length.
  void add_row(std::vector<Cell> row);
};

// "%.10g"; non-finite values become "undefined".
std::string format_number(double v);

// Header row plus one line per row, LF terminated. Fields containing a comma,
// quote or newline are quoted.
std::string to_csv(const OutputTable& table);

// {"headers": [...], "rows": [[...], ...]} with reals rounded to the same
// 10 significant digits as the CSV form.
nlohmann::json to_json(const OutputTable& table);

}  // namespace wpr::cli
