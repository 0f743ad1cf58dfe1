#pragma once

#include <string>
#include <vector>

namespace latsize::cli {

// Exit codes of the latsize tool.
inline constexpr int kOk = 0;
inline constexpr int kSyntaxError = 2;
inline constexpr int kPrecondition = 3;
inline constexpr int kInternal = 4;

struct CommandResult {
    int exit_code = kOk;
    std::string out;
    std::string err;
};

// Runs one invocation; `args` excludes the program name, e.g.
// {"sigma", "--vertices", "0,0;3,0;0,3", "--json"}.
CommandResult run_command(const std::vector<std::string>& args);

} // namespace latsize::cli
