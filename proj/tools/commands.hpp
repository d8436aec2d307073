#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace od::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `odgraph` command line. args[0] is the program name.
/// Returns the process exit code: 0 success, 1 verification mismatch or
/// runtime failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace od::cli
