#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qseries::cli {

/// Exit codes: 0 everything passed, 1 a verification failed, 2 usage,
/// parse, configuration or I/O error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name) writing
/// results to `out` (unless --out redirects them) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qseries::cli
