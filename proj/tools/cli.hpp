#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pbias::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kIo = 2,
    kCapacity = 3,
    kViolation = 4,
};

// Runs the pbias command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbias::cli
