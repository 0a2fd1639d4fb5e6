#include <iostream>

#include "modcycle/cli.hpp"

int main(int argc, char** argv) { return modcycle::cli_dispatch(argc, argv, std::cout, std::cerr, std::cin); }
