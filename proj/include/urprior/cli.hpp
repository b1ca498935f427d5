#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace urprior {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitExists = 0,  // ur-prior exists / command succeeded
  kExitNone = 1,    // no ur-prior / no counterexample possible
  kExitInvalid = 2, // malformed or invalid input, bad usage
};

/// Entry point of the `urprior` tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace urprior
