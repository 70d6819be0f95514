#include <iostream>

#include "gorenstein/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gorenstein::run_cli(args, std::cout, std::cerr);
}
