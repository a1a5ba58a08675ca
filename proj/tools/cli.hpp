#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace treehopf::cli {

/// Runs the command line given by args (without the program name).
/// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treehopf::cli
