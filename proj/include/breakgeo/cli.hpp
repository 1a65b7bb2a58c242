#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace breakgeo {

/// Runs one command line (program name excluded). Returns the process exit
/// code: 0 success, 2 usage/parse/domain error, 3 problem too large.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace breakgeo
