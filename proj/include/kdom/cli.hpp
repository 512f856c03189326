#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kdom::cli {

// Exit codes: 0 success (or non-strict "no"), 1 suite failure or strict
// "no", 2 parse/usage error, 3 solver cap exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kdom::cli
