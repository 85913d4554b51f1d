#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace comptonqcd::cli {

/// Runs one subcommand. args[0] is the program name. Returns 0 on success,
/// 1 when a computation fails and 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace comptonqcd::cli
