#include <iostream>

#include "hglens_cli/cli.hpp"

int main(int argc, char** argv) { return hglens::cli::run(argc, argv, std::cout, std::cerr); }
