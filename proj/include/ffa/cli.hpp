#pragma once

// Command-line front end: parameter sweeps emitted as CSV or JSON.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ffa::cli {

enum class Format { Csv, Json };

struct RunConfig {
  std::string subcommand;
  std::map<std::string, std::string> params;
  Format format = Format::Csv;
  std::optional<std::string> output;  // stdout when empty
  unsigned precision = 20;
};

struct RunResult {
  int status = 0;
  std::string output;
  std::string diagnostic;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInvariant = 4;

// Dispatches one subcommand; never throws. Library errors map to exit codes.
RunResult run(const RunConfig& config);

// "A..B", "A" or "a,b,c"; ascending for A..B, listed order otherwise.
std::vector<std::uint64_t> parse_range(const std::string& text);

const std::vector<std::string>& subcommands();

// Full argv handling: parses flags, runs, writes the table to `out` (or the
// --output file) and diagnostics to `err`. Returns the exit status.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ffa::cli
