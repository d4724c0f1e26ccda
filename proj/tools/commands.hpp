#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gossipcli {

// Parses command-line arguments (program name excluded) and runs one
// subcommand. Returns the exit code: 0 on success, 2 on a usage problem,
// 1 when a computation fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gossipcli
