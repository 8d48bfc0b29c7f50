#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lsug::cli {

/// Exit codes: 0 holds/recognized, 1 fails/not recognized, 2 usage or input error.
inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lsug::cli
