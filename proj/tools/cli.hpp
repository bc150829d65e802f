#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schurlab::cli {

/// Runs the command-line front end on the given argument list (without the
/// program name). Results go to `out`, diagnostics to `err`.
/// Exit codes: 0 success / all checks passed, 1 a verification check
/// failed, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace schurlab::cli
