#pragma once

#include <string>
#include <vector>

namespace cyl7 {

// Command-line entry point. Exit codes: 0 success / all checks pass,
// 1 check failure or guarded refusal, 2 usage error, 3 internal error.
int run_cli(const std::vector<std::string>& args);

} // namespace cyl7
