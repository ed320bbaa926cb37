#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ttc {

// Command dispatch for the ttc tool.  Everything on `out` is deterministic
// for fixed inputs and flags; timings go to `err`.  Exit codes: 0 success,
// 1 negative finding (unsat, violations, incomparable, failures), 2 usage
// or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ttc
