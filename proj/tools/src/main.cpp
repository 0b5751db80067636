#include <iostream>

#include "sbw_tools/cli.hpp"

int main(int argc, char** argv) { return sbw::cli::run(argc, argv, std::cout, std::cerr); }
