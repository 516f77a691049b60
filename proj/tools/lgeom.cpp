#include <iostream>

#include "lgeom/cli.hpp"

int main(int argc, char** argv) { return lgeom::cli::run(argc, argv, std::cout, std::cerr); }
