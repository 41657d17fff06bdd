#include "fracdiff/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return fracdiff::run_cli(argc, argv, std::cout, std::cerr);
}
