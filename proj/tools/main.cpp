#include <iostream>

#include "polydig/cli.hpp"

int main(int argc, char** argv) { return polydig::run_cli(argc, argv, std::cout, std::cerr); }
