#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adjspec::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResourceCap = 3;

// args excludes the program name. Reports go to --out or to `out`;
// diagnostics go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adjspec::cli
