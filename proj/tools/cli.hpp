#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpweyl::cli {

/// Exit codes of run_cli.
inline constexpr int kAllPass = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpweyl::cli
