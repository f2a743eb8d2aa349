#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ksba::cli {

/// Runs one command line. Returns 0 on success, 1 on a failed computation or claim, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ksba::cli
