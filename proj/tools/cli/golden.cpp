#include "golden.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace wpr::cli {
namespace {

const char* const kColumns[] = {"table_id", "T", "r", "a", "b", "quantity",
                                "paper_value", "tolerance_rel", "tolerance_abs", "errata_note"};

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else if (c != '\r') {
      out.back() += c;
    }
  }
  return out;
}

double parse_real(const std::string& s, const std::filesystem::path& path, int line_no) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) {
    std::ostringstream msg;
    msg << "golden file " << path << " line " << line_no << ": bad number '" << s << "'";
    throw GoldenFileError(msg.str());
  }
  return v;
}

std::optional<long> parse_optional_int(const std::string& s, const std::filesystem::path& path,
                                       int line_no) {
  if (s.empty()) return std::nullopt;
  return long(parse_real(s, path, line_no));
}

}  // namespace

std::filesystem::path default_golden_path() { return WPRANGE_DEFAULT_GOLDEN; }

std::vector<GoldenRow> load_golden(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw GoldenFileError("golden data file not found: expected " + path.string() +
                          " (override with --golden)");
  }
  std::string line;
  if (!std::getline(in, line) || split_csv_line(line) != std::vector<std::string>(std::begin(kColumns), std::end(kColumns))) {
    throw GoldenFileError("golden file " + path.string() + ": unexpected header");
  }
  std::vector<GoldenRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != std::size(kColumns)) {
      std::ostringstream msg;
      msg << "golden file " << path << " line " << line_no << ": expected " << std::size(kColumns)
          << " fields, got " << f.size();
      throw GoldenFileError(msg.str());
    }
    GoldenRow g;
    g.table_id = f[0];
    g.T = parse_real(f[1], path, line_no);
    g.r = parse_optional_int(f[2], path, line_no);
    g.a = parse_optional_int(f[3], path, line_no);
    g.b = parse_optional_int(f[4], path, line_no);
    g.quantity = f[5];
    g.paper_value = parse_real(f[6], path, line_no);
    g.tolerance_rel = parse_real(f[7], path, line_no);
    g.tolerance_abs = parse_real(f[8], path, line_no);
    g.errata_note = f[9];
    rows.push_back(std::move(g));
  }
  return rows;
}

CellStatus judge(const GoldenRow& row, double value) {
  if (!row.errata_note.empty()) return CellStatus::errata;
  const double dev = std::abs(value - row.paper_value);
  const double tol = std::max(row.tolerance_rel * std::abs(row.paper_value), row.tolerance_abs);
  return dev <= tol ? CellStatus::pass : CellStatus::fail;
}

const char* status_name(CellStatus s) {
  switch (s) {
    case CellStatus::pass: return "PASS";
    case CellStatus::fail: return "FAIL";
    case CellStatus::errata: return "ERRATA";
  }
  return "?";
}

const GoldenRow* find_golden(const std::vector<GoldenRow>& rows, const std::string& table_id, double T,
                             std::optional<long> r, const std::string& quantity) {
  for (const GoldenRow& g : rows) {
    if (g.table_id == table_id && g.T == T && g.r == r && g.quantity == quantity) return &g;
  }
  return nullptr;
}

}  // namespace wpr::cli
