#pragma once

#include <string>
#include <vector>

namespace qsi {

struct CliResult {
    int status = 0;       // 0 ok, 2 malformed input, 3 infeasible budget
    std::string output;   // JSON on success
    std::string error;    // diagnostic on failure
};

// The whole command line surface, callable in-process for tests.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace qsi
