#include <iostream>

#include "mincodes/cli.hpp"

int main(int argc, char** argv) { return mincodes::cli::main(argc, argv, std::cout, std::cerr); }
