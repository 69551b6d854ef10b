#pragma once

#include <istream>
#include <string>
#include <vector>

namespace ribbon::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kInputError = 2,
    kGuardExceeded = 3,
};

struct Result {
    int exit_code = kOk;
    std::string out;
    std::string err;
};

/// Runs one command line (without the program name). Standard output is only
/// filled when the command succeeds; `stdin_stream` backs the file argument "-".
Result run(const std::vector<std::string>& args, std::istream& stdin_stream);

}  // namespace ribbon::cli
