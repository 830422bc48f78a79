#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wpr::cli {

// One printed reference value with its tolerance.
struct GoldenRow {
  std::string table_id;  // table1, table2, table3
  double T = 0.0;
  std::optional<long> r;
  std::optional<long> a;
  std::optional<long> b;
  std::string quantity;
  double paper_value = 0.0;
  double tolerance_rel = 0.0;
  double tolerance_abs = 0.0;
  std::string errata_note;  // nonempty: printed value is known to be wrong
};

class GoldenFileError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bundled golden file location baked in at build time.
std::filesystem::path default_golden_path();

// Throws GoldenFileError naming the path when it is missing or malformed.
std::vector<GoldenRow> load_golden(const std::filesystem::path& path);

enum class CellStatus { pass, fail, errata };

// |value - printed| <= max(tolerance_rel * |printed|, tolerance_abs); rows with an
// errata note are reported as errata whatever the value.
CellStatus judge(const GoldenRow& row, double value);
const char* status_name(CellStatus s);

// Looks up a row; nullptr when absent.
const GoldenRow* find_golden(const std::vector<GoldenRow>& rows, const std::string& table_id, double T,
                             std::optional<long> r, const std::string& quantity);

}  // namespace wpr::cli
