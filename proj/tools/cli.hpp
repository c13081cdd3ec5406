#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace strgraph::cli {

enum ExitCode : int {
    kOk = 0,
    kNegative = 1,  // e.g. not great, no certificate found, experiment expectation missed
    kUsage = 2,
    kDefect = 3,
};

/// Runs one invocation. args excludes the program name. stdin is read when
/// an input path is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace strgraph::cli
