#include <cstdio>
#include <vector>

#include "grmod/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    grmod::CommandResult r = grmod::run_command(args);
    std::fputs(r.out.c_str(), stdout);
    std::fputs(r.err.c_str(), stderr);
    return r.exit;
}
