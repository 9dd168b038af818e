#include <iostream>

#include "gbslocc/cli.hpp"

int main(int argc, char **argv) { return gbslocc::run_cli(argc, argv, std::cout, std::cerr); }
