#pragma once

// Command-line front end of `shd`.

#include <iosfwd>
#include <string>
#include <vector>

namespace sfh {

enum ExitStatus : int {
    kExitOk = 0,
    kExitInvalid = 1,
    kExitParse = 2,
    kExitUndetermined = 3,
    kExitFailure = 4,
};

// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sfh
