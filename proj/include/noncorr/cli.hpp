#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace noncorr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInternal = 2;

/// Runs one invocation. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`. Verdicts never change the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace noncorr::cli
