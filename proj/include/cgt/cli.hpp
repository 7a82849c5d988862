#pragma once

#include <string>
#include <vector>

namespace cgt {

/// Command-line entry point.  Exit codes: 0 success or all checks passed,
/// 1 verification failure, 2 usage or parse error, 3 cap exceeded.
int run_cli(const std::vector<std::string>& args);

} // namespace cgt
