#include <iostream>

#include "bitlet/cli.hpp"

int main(int argc, char** argv) { return bitlet::cli::run(argc, argv, std::cout, std::cerr); }
