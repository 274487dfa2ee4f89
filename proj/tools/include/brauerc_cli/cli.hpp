#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace brauerc::cli {

// Exit codes: 0 success, 1 failing verification instance, 2 usage or
// math error, 3 suite refused because of its hypotheses.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brauerc::cli
