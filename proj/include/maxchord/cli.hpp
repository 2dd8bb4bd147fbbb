#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxchord {

// Runs one CLI invocation (args exclude the program name) against the given
// streams. Exit codes: 0 success, 1 validation or precondition failure,
// 2 verification mismatch.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace maxchord
