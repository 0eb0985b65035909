#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maniplex {

// Dispatches one CLI invocation. Returns 0 on success, 1 on a validation or
// verification failure, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maniplex
