#pragma once

#include <string>
#include <utility>
#include <vector>

#include "options.hpp"
#include "report.hpp"

namespace warpspec::cli {

enum ExitCode { kSuccess = 0, kUsage = 1, kVerificationFailed = 2, kInconclusive = 3 };

/// Everything a command produces. Nothing is printed or written until the command
/// has finished, so a failing command leaves no partial output.
struct CommandResult {
    int exit_code = kSuccess;
    std::string text;
    Json document;
    std::vector<std::pair<std::string, std::string>> files;  ///< path, contents
};

CommandResult run_classify(const Options& opts);
CommandResult run_reduce(const Options& opts);
CommandResult run_solve(const Options& opts);
CommandResult run_verify(const Options& opts);

}  // namespace warpspec::cli
