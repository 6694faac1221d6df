#pragma once

#include <string>
#include <vector>

namespace lcst::cli {

/// Runs the command-line tool. Returns the process exit code:
/// 0 success, 1 validation error, 2 numerical guard tripped, 64 usage error.
int cli_main(const std::vector<std::string>& args);

}  // namespace lcst::cli
