#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tka::cli {

/// Runs the tka command line on args (without the program name), writing the
/// report to out and diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tka::cli
