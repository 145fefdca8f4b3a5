#include <iostream>
#include <string>
#include <vector>

#include "bichroma/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bichroma::run_cli(args, std::cout, std::cerr);
}
