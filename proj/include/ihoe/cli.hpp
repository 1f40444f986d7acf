#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ihoe {

/// Dispatch a CLI invocation. Returns 0 on success, 1 when a verification
/// fails (axiom/identity), 2 on usage errors (unknown verb, malformed input).
/// Reports go to `out` as JSON, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ihoe
