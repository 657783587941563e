#include "ybsl21/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return ybsl21::cli::main_entry(argc, argv, std::cout, std::cerr);
}
