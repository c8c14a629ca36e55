#include <iostream>
#include <vector>

#include "qsi/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    qsi::CliResult res = qsi::run_cli(args);
    if (!res.output.empty()) std::cout << res.output;
    if (!res.error.empty()) std::cerr << "error: " << res.error << "\n";
    return res.status;
}
