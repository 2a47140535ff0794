#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    return otto_lgi::cli::run(argc, argv, std::cout, std::cerr);
}
