#include "mcshane/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return mcshane::cli::run_cli(argc, argv, std::cout, std::cerr);
}
