#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pangram::cli {

/// Exit codes: 0 success (any decision), 1 internal/unexpected failure,
/// 2 input error, 3 size cap or step budget exceeded.
enum ExitCode : int { ok = 0, failure = 1, input_error = 2, limit_error = 3 };

/// Runs the `pangram` command line; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pangram::cli
