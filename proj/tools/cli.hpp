#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace troptab::cli {

/// Runs the command line `args` (without the program name). Returns the exit
/// code: 0 success, 1 domain error, 2 parse or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace troptab::cli
