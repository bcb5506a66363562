#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sinograph_app {

enum ExitCode : int { kOk = 0, kUsage = 1, kInputError = 2, kDataError = 3 };

// Runs one command line (without the program name). Normal output goes to
// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sinograph_app
