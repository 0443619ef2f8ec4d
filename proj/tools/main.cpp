#include <iostream>

#include "ramanujan/cli.hpp"

int main(int argc, char** argv) { return ramanujan::run_cli(argc, argv, std::cout, std::cerr); }
