#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bocd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kRunRecordFormatVersion = 1;

/// Entry point for the `bocd` tool: `detect`, `evaluate` and `generate`
/// subcommands. `args` excludes the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bocd::cli
