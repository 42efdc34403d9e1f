#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace moment_forge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitProperty = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. args excludes the program name. Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moment_forge::cli
