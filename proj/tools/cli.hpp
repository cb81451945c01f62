#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pbraid::cli {

enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kUnequal = 2,
  kUnknown = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace pbraid::cli
