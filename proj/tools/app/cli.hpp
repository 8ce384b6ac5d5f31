#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace frontier::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumerical = 3;

/// Runs the command line `args` (program name excluded) and returns the
/// process exit code: 0 success, 2 input error, 3 numerical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frontier::app
