#include "output_table.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace wpr::cli {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string cell_text(const Cell& c) {
  if (std::holds_alternative<std::monostate>(c)) return {};
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return format_number(std::get<double>(c));
}

nlohmann::json cell_json(const Cell& c) {
  if (std::holds_alternative<std::monostate>(c)) return nullptr;
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  const double v = std::get<double>(c);
  if (!std::isfinite(v)) return kUndefined;
  return std::stod(format_number(v));
}

}  // namespace

void OutputTable::add_row(std::vector<Cell> row) {
  if (row.size() != headers.size()) {
    throw std::logic_error("output row has " + std::to_string(row.size()) + " cells for " +
                           std::to_string(headers.size()) + " headers");
  }
  rows.push_back(std::move(row));
}

std::string format_number(double v) {
  if (!std::isfinite(v)) return kUndefined;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string to_csv(const OutputTable& table) {
  std::string out;
  auto line = [&out](const auto& cells, auto&& text) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_field(text(cells[i]));
    }
    out += '\n';
  };
  line(table.headers, [](const std::string& h) { return h; });
  for (const auto& row : table.rows) line(row, cell_text);
  return out;
}

nlohmann::json to_json(const OutputTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& c : row) r.push_back(cell_json(c));
    rows.push_back(std::move(r));
  }
  return {{"headers", table.headers}, {"rows", std::move(rows)}};
}

}  // namespace wpr::cli
