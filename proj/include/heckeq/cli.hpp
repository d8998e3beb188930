// Command-line front end exposing the computations with deterministic
// human-readable or JSON output.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heckeq {

// Parses one subcommand with its arguments, runs it, and writes the result to
// `out` (errors to `err`, or as a JSON object on `out` when --json is given).
// Returns the exit code: 0 success, 1 domain error, 2 usage error, 3 cap
// exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace heckeq
