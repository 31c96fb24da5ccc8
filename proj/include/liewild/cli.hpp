#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liewild::cli {

/// Command-line entry point. Exit codes: 0 success (wild verdicts included),
/// 2 unsupported verdict, 3 input error (unknown flags, malformed documents,
/// bad recipes), 1 internal failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liewild::cli
