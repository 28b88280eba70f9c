#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rtp::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kHolds = 0,
  kFails = 1,
  kUsage = 2,
};

/// Runs one invocation; `args` excludes the program name. Output goes to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rtp::cli
