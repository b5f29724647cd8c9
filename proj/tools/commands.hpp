#pragma once

#include <iosfwd>

namespace pascal::cli {

/// Exit codes of the `pascal` tool.
enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kResource = 3,
  kConstruction = 4,
  kVerification = 5,
};

/// Runs the command line `argv` (argv[0] is the program name). Reports go to
/// `out`, diagnostics to `err`; every error line starts with an "error:<kind>" token.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pascal::cli
