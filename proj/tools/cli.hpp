#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace slee::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputError = 2,     // I/O or parse failure
  kInconclusive = 3,   // a strict claim whose margin is within tolerance
  kFailed = 4,         // a checked claim is contradicted
};

/// Runs one command line (args[0] is the program name). Everything is
/// written to `out` / `err` in one piece at the end.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slee::cli
