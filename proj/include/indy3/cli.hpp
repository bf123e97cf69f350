#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace indy3 {

/// Runs one CLI command. Exit codes: 0 success, 1 usage or input error,
/// 2 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace indy3
