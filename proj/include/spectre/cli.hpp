#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spectre::cli {

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on domain errors and 2 on
/// usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spectre::cli
