#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ogc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses `args` (without the program name) and runs the subcommand.
/// Returns 0 on success, 1 when verification fails, 2 on usage or
/// configuration errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ogc::cli
