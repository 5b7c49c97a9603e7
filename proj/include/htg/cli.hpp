#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace htg {

// Exit codes of the htg command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;

/// Verification sweeps above this order need --force.
inline constexpr int kVerifyGuardOrder = 200;

/// Runs the tool on `args` (without the program name), writing reports to
/// `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace htg
