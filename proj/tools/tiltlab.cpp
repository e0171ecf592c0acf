#include <iostream>

#include "tiltlab/cli.hpp"

int main(int argc, char** argv) { return tiltlab::run_cli(argc, argv, std::cout, std::cerr); }
