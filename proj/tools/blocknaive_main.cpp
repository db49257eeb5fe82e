#include <iostream>

#include "blocknaive/cli.hpp"

int main(int argc, char** argv) { return blocknaive::cli::run_cli(argc, argv, std::cout, std::cerr); }
