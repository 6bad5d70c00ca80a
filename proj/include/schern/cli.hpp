#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace schern::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInternalError = 1,
  kUsageError = 2,
  kCrossCheckFailure = 3,
};

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

const char* version();

}  // namespace schern::cli
