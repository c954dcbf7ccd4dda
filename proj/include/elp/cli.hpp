#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace elp {

/// Command-line driver. args excludes the program name. Returns 0 when a
/// worldview was found (or --models 0 was given), 1 when there is none, 2 on
/// input errors and 3 when --verify detects a disagreement.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace elp
