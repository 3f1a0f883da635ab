#include <iostream>

#include "flrs/cli.hpp"

int main(int argc, char** argv) { return flrs::cli::run(argc, argv, std::cout, std::cerr); }
