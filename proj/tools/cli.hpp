#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace timps::cli {

/// Runs one command line (args excludes the program name). Returns the exit
/// status: 0 pass, 1 failed check or unresolved search, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace timps::cli
