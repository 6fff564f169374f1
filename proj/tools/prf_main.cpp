#include <iostream>

#include "prf/cli.hpp"

int main(int argc, char** argv) { return prf::run_cli(argc, argv, std::cout, std::cerr); }
