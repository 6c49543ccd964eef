#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simpvol::cli {

enum ExitCode : int {
  ok = 0,
  invalid_input = 1,
  bad_arguments = 2,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simpvol::cli
