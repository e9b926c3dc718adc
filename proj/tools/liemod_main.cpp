#include <iostream>

#include "liemod/cli.hpp"

int main(int argc, char** argv) {
    return liemod::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
