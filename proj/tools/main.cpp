#include <cstdio>
#include <string>
#include <vector>

#include "cli/run.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    cli::RunResult res = cli::run(args);
    if (!res.out.empty()) std::fwrite(res.out.data(), 1, res.out.size(), stdout);
    if (!res.err.empty()) std::fwrite(res.err.data(), 1, res.err.size(), stderr);
    return res.exit_code;
}
