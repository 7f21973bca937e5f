#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mono3sat::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kInputError = 3 };

/// Runs one subcommand. args excludes the program name. "-" as a file name
/// means stdin for inputs and stdout for outputs.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err);

} // namespace mono3sat::cli
