#include <iostream>

#include "fdpa/cli.hpp"

int main(int argc, char **argv) { return fdpa::cli::run(argc, argv, std::cout, std::cerr); }
