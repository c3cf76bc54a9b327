#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace newtonkit::cli {

/// Runs one command line (without the program name). Writes the result to out
/// and diagnostics to err. Returns 0 on success, 1 on a usage error and 2 on a
/// domain error or a failed verification.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace newtonkit::cli
