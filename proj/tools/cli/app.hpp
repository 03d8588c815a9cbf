#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zetalab::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Parses arguments (excluding the program name) and runs the command.
/// Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zetalab::cli
