#include <iostream>

#include "ntnsim/cli.hpp"

int main(int argc, char** argv) { return ntnsim::cli_main(argc, argv, std::cout, std::cerr); }
