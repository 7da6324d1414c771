#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pinnacle::cli {

/// Runs one invocation. args excludes the program name.
/// Exit codes: 0 success, 1 verification mismatch, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pinnacle::cli
