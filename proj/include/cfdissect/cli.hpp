#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfdissect {

/// Exit codes: 0 success or membership, 1 rejection or a failed comparison,
/// 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfdissect
