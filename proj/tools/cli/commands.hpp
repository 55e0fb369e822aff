#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace persched::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidSchedule = 1,
  kInputError = 2,
  kResourceLimit = 3,
};

/// Runs one command line (args exclude the program name). A path of "-"
/// reads from `in`. Structured output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace persched::cli
