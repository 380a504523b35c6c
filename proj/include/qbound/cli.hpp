#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qbound {

/// Runs one CLI invocation (argv without the program name) against the given
/// streams. Returns the process exit status: 0 success, 1 usage error,
/// 2 audit violation of a bound that must hold.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qbound
