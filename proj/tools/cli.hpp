#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mrce::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kRejected = 1,      // check found a violation, or an audit failed
  kParseError = 2,
  kIncompatible = 3,
  kCapacity = 4,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mrce::cli
