#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ortho {

// Runs one CLI invocation (argv without the program name) against the given
// streams. Exit codes: 0 success, 2 domain error, 3 numerical-regime error,
// 64 usage. Errors are emitted to `err` as {"error": code, "detail": ...}.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ortho
