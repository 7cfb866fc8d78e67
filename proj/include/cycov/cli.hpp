#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cycov::cli {

/// Runs one command. Exit code 0 on success, 1 on domain errors (one
/// machine-readable line on err), 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cycov::cli
