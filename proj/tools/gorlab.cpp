#include <iostream>

#include "gorlab/cli.hpp"

int main(int argc, char** argv) { return gorlab::cli::run(argc, argv, std::cout, std::cerr); }
