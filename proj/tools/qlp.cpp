#include <iostream>

#include "qlp/cli.hpp"

int main(int argc, char** argv) { return qlp::cli::run_argv(argc, argv, std::cout, std::cerr); }
