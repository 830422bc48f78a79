#pragma once

#include <ostream>

namespace wpr::cli {

// Parses argv, runs one subcommand and writes its table to `out` (or the
// --out file). Returns 0 on success or oracle PASS, 1 on oracle FAIL and 2 on
// usage or domain errors; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wpr::cli
