#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lzbg {

/// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitUsage = 3;

/// Entry point of the lzbg tool. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lzbg
