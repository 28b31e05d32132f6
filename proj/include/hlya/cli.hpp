#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hlya {
namespace cli {

/// Exit-code contract: 0 pass / success, 1 mathematical failure (an axiom or
/// cocycle check failed, a decomposition or equivalence does not exist),
/// 2 parse error, 3 precondition violation (the delegate's error name is
/// printed).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cli
} // namespace hlya
