#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chibound::cli {

enum ExitCode : int {
    kOk = 0,
    kInconsistent = 1, // a mathematical inconsistency or bound violation was found
    kUsage = 2,        // bad flags or unparsable input
    kExhausted = 3,    // search finished without a witness
};

/// Runs the command line `args` (args[0] is the program name). Standard
/// input is read from `in` when --input is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace chibound::cli
