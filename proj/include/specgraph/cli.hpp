// cli.hpp — command-line front end, exposed as a function for testing.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specgraph::cli {

/// Dispatch a command line (without the program name). Returns the process
/// exit code: 0 success, 1 negative verdict or violations (oracle and sweep),
/// 2 usage or input errors.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace specgraph::cli
