#include <iostream>

#include "fourpage/cli/commands.hpp"

int main(int argc, char** argv) {
    return fourpage::cli::run_cli(argc, argv, std::cout, std::cerr);
}
