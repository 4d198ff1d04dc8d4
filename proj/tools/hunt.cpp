#include <iostream>

#include "hunt/cli.hpp"

int main(int argc, char** argv) { return hunt::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
