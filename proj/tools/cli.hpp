#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclemis::cli {

/// Runs one command line (args exclude the program name). Exit codes: 0 on
/// success or a passing verification, 1 on a failed verification, 2 on a
/// usage or input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace cyclemis::cli
