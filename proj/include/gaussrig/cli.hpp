#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gaussrig {

/// Runs one CLI command. `args` excludes the program name. Exit codes:
/// 0 affirmative result, 1 negative result (not equal / check failed /
/// not found), 2 usage or parse error (a diagnostic naming the offending
/// token goes to `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gaussrig
