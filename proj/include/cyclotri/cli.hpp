#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclotri::cli {

/// Runs the command line `args` (without the program name).  Returns 0 on
/// success, 1 when a verification fails and 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cyclotri::cli
