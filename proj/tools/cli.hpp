#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace twistcoh::cli {

// Exit codes shared by every sub-command.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInputError = 2,
  kInadmissible = 3,
  kModeMismatch = 4,
  kVerificationFailure = 5,
};

// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twistcoh::cli
