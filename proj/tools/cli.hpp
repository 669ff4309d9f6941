#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace steenrod::cli {

/// Runs the command line `args` (without the program name).
/// Exit codes: 0 success, 1 failed verification or computation error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steenrod::cli
