#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cdyck::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,  // a word or tuple was rejected; the error name goes to `err`
  kUsage = 2,
  kInternal = 3,      // integrality assertion or route disagreement
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cdyck::cli
