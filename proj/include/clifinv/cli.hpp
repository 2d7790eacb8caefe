#pragma once

#include <string>
#include <vector>

namespace clifinv {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitNotInvertible = 2,
  kExitUsage = 3,
  kExitUnknownFormula = 4,
  kExitCatalogDefect = 5,
};

struct CliResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

// Runs one invocation; args exclude the program name.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace clifinv
