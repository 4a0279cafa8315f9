#include <iostream>
#include <string>
#include <vector>

#include "repst/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return repst::run_cli(args, std::cout, std::cerr);
}
