#include "amorph/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return amorph::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
