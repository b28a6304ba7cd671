#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cforge::cli {

/// Dispatches one command. args excludes the program name. Data and reports
/// go to `out` (or --out), certificates of failure to `err`.
/// Exit codes: 0 verified success, 1 failed verification or infeasible
/// construction, 2 usage or malformed input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace cforge::cli
