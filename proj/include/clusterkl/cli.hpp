#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ckl {

// Dispatches one CLI invocation.  Returns 0 on success, 1 on domain errors
// (NotMCHexagonAvoiding and friends), 2 on usage errors.  Reports go to
// `out`, diagnostics to `err`; output is byte-deterministic per input.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ckl
