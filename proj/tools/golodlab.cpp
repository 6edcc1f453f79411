#include <iostream>

#include "golodlab/cli.hpp"

int main(int argc, char** argv) { return golod::run_cli(argc, argv, std::cout, std::cerr); }
