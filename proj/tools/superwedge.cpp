#include <iostream>
#include <string>
#include <vector>

#include "superwedge/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return superwedge::run_cli(args, std::cout, std::cerr);
}
