#include <iostream>

#include "minoru/cli.hpp"

int main(int argc, char** argv) { return minoru::cli::run(argc, argv, std::cout, std::cerr); }
