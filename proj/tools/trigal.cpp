#include "trigal/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return trigal::cli::run(argc, argv, std::cout, std::cerr);
}
