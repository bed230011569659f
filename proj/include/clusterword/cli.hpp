#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clusterword {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
};

/// Runs the `clusterword` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clusterword
