#include <iostream>

#include "weilcensus_cli/cli.hpp"

int main(int argc, char** argv) { return weilcensus::cli::run(argc, argv, std::cout, std::cerr); }
