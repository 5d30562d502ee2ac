#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subdisc {

// Dispatches one invocation; `args` excludes the program name. Structured
// results go to `out` (JSON, or CSV for grid exports), diagnostics to `err`.
// Returns 0 on success, 2 on validation/usage errors, 1 on internal errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subdisc
