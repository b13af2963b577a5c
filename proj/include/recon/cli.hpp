#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recon::cli {

/// Runs one subcommand. `args` excludes the program name. Exit status is 0 on
/// success, 1 for a Cyclic verdict under `recognize --status-verdict`, and 2
/// on input errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace recon::cli
