#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace setlab::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kMissingFile = 3,
  kMalformedInput = 4,
  kRuntime = 5,
};

// Parses and executes one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace setlab::cli
