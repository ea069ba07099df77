#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orbilat::cli {

/// Exit codes: 0 ok, 1 internal inconsistency, 2 precondition violated, 64 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace orbilat::cli
