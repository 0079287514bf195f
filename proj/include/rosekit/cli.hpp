#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rosekit::cli {

/// Runs one subcommand. Exit codes: 0 success, 1 a verification harness found a
/// violated invariant, 2 bad input (diagnostic on err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rosekit::cli
