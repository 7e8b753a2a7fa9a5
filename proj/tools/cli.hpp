#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace luroth::cli {

/// Dispatches one command line (without the program name). Returns the
/// process exit status: 0 success, 1 domain or validation error, 2 budget
/// or precision exhaustion. Output and diagnostics go to the two streams.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace luroth::cli
