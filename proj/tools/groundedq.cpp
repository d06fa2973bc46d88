#include <iostream>

#include "groundedq/cli.hpp"

int main(int argc, char** argv) { return gq::run_cli(argc, argv, std::cout, std::cerr); }
