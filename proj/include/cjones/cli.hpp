#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cjones::cli {

// Runs one CLI invocation.  `args` excludes the program name.  Data rows go
// to `out` (CSV with a header by default, one JSON object per row with
// --json); diagnostics go to `err` only.  Exit codes: 0 success, 2 usage
// error, 3 math/domain error, 4 expression or braid parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cjones::cli
