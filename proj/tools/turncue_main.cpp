#include <iostream>
#include <string>
#include <vector>

#include "turncue/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return turncue::run_cli(args, std::cout, std::cerr);
}
