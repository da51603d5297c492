#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toric::cli {

// args excludes the program name. Returns 0 on success, 1 on a domain error, 2 on a
// usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
