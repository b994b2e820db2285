#include <iostream>

#include "fdiv/cli.hpp"

int main(int argc, char** argv) { return fdivergence::run_cli(argc, argv, std::cout, std::cerr); }
