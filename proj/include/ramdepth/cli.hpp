#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ramdepth {

/// Runs the command-line driver on the given arguments (program name
/// excluded). Normal output goes to `out`, diagnostics to `err`.
/// Returns 0 when every check passes, 1 on computation failure or any
/// FAIL row, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramdepth
