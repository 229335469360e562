#include <iostream>

#include "cyclepack/cli.hpp"

int main(int argc, char** argv) {
    return cyclepack::run(argc, argv, std::cin, std::cout, std::cerr);
}
