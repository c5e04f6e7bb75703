#include "polydual/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return polydual::run_cli(argc, argv, std::cout, std::cerr); }
