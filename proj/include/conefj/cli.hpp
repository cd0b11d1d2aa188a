#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conefj {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitParse = 2,
    kExitDomain = 3,
    kExitFalsified = 4,
    kExitDisagree = 5,
};

/**
 * Runs one command line (without the program name). The JSON report goes to
 * `out`, diagnostics to `err`.
 *
 *   cone {dual|pointed} FILE
 *   cone {member|interior|separate} FILE --point "r1,r2,..."
 *   cone product FILE FILE
 *   cone caratheodory POINTS_FILE --point "r1,..."
 *   analyze FILE [--grid N]
 *   check FILE --property P [--grid N] [--seed S] [--mu-samples M] [--segment-grid T]
 *   verify FILE --theorem {crouzeix-ferland|fj-pc|fj-pi} [same options]
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conefj
