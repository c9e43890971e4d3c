#include "salem/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return salem::cli::run(argc, argv, std::cout, std::cerr); }
