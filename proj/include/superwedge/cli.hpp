#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace superwedge {

// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitParse = 1,           // unreadable input, parse error, unknown catalog id
    kExitInvalid = 2,         // algebra fails validate, ideal not central, witness check failed
    kExitDisagreement = 3,    // wedge and Hopf routes differ
    kExitNotNilpotent = 4,    // Hopf route asked for a non-nilpotent algebra
    kExitMismatch = 5,        // reproduce: some row differs from the expected result
    kExitCpCertifiedNo = 6,   // cpcheck found a commuting pair with nonzero lift bracket
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superwedge
