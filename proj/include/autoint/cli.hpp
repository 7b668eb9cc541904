#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace autoint::cli {

inline constexpr int exit_ok = 0;
/// A mathematical property failed: counterexample, violated bound or report.
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;

/// Runs the autoint command line; args excludes the program name.
/// JSON results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace autoint::cli
