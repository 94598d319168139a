#include <iostream>

#include "hsalg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hsalg::run(args, std::cout, std::cerr);
}
