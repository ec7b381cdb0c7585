#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gfg {

inline constexpr int kExitPositive = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

/// Runs one command line (args excludes the program name). Reports go to `out`,
/// diagnostics to `err`; with --json every outcome, errors included, is one JSON
/// object on `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gfg
