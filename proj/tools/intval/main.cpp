#include <iostream>

#include "intval/cli/cli.hpp"

int main(int argc, char** argv) { return intval::cli::run(argc, argv, std::cout, std::cerr); }
