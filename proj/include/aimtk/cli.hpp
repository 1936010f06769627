#pragma once

#include <string>
#include <vector>

namespace aimtk::cli {

// Exit codes: 0 success, 2 parse error, 3 configuration error,
// 4 unsupported workload, 1 anything else.
enum ExitCode {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kConfigError = 3,
  kUnsupportedWorkload = 4,
};

int run(const std::vector<std::string>& args);

}  // namespace aimtk::cli
