#include <iostream>
#include <string>
#include <vector>

#include "heckeq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return heckeq::run(args, std::cout, std::cerr);
}
