#include <iostream>

#include "morava/cli.hpp"

int main(int argc, char** argv) { return morava::cli::run(argc, argv, std::cout, std::cerr); }
