#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diamond::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  Ok = 0,
  /// Internal invariant violated (a bug, never a verdict).
  Internal = 1,
  Invalid = 2,
  CertificateFailed = 3,
  NotConvergent = 4,
  ResourceExceeded = 5,
};

/// Runs the command line `args` (without the program name). The input document
/// is read from the path given as positional argument, or from `in` when the
/// path is absent or "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace diamond::cli
