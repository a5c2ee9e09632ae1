#include <iostream>

#include "pmolp_cli.hpp"

int main(int argc, char** argv) { return pmolp::cli::run(argc, argv, std::cout, std::cerr); }
