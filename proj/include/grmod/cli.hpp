#pragma once
#include <string>
#include <vector>

namespace grmod {

// Captured outcome of one tool invocation, for embedding in tests.
struct CommandResult {
    int exit = 0;
    std::string out;
    std::string err;
};

// Runs one invocation: `args` as on the command line, program name omitted.
// Exit codes: 0 success (all checks Pass or Evidence), 1 a check or
// predicate failed, 2 usage or parse error, 3 degree cap exceeded.
CommandResult run_command(const std::vector<std::string>& args);

} // namespace grmod
