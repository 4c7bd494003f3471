#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace refh::cli {

enum ExitCode : int { kSuccess = 0, kDataError = 1, kUsageError = 2 };

/// Runs the `refh` command line. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace refh::cli
