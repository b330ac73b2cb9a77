#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eulerweft {

/// Run the CLI on the given argument list (no program name). Writes results
/// to `out`, diagnostics to `err`. Exit codes: 0 success, 1 usage error,
/// 2 validation/input error, 3 enumeration cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulerweft
