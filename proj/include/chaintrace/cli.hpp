#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chaintrace {

enum ExitCode : int {
  kExitOk = 0,
  kExitPropertyFailed = 1,
  kExitUsage = 2,
};

// Runs one command line (program name excluded). JSON reports go to `out`,
// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chaintrace
