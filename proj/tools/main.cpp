#include <iostream>

#include "avgroups/cli.hpp"

int main(int argc, char** argv) {
    return avgroups::cli::main(argc, argv, std::cout, std::cerr);
}
