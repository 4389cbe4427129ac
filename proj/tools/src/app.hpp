#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace warpspec::cli {

/// Parses the command line, runs the subcommand and writes its output.
/// Returns the process exit code.
int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace warpspec::cli
