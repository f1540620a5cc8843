#pragma once

#include <string>
#include <vector>

namespace forel {

// Command-line entry point; args exclude the program name. Exit codes:
// 0 success/certified, 1 hypothesis failure, 2 input error, 3 runtime failure.
int run_cli(std::vector<std::string> args);

} // namespace forel
