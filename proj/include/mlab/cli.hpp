#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mlab {

/// Command-line front end. `args` excludes the program name. Exit codes:
/// 0 success, 1 assertion/verdict failure, 2 input validation,
/// 3 capability, 4 I/O.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mlab
