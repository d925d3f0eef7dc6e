#include <iostream>

#include "propeq/cli.hpp"

int main(int argc, char** argv) { return propeq::cli::run(argc, argv, std::cout, std::cerr); }
