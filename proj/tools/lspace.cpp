#include <iostream>

#include "lspace/cli.hpp"

int main(int argc, char** argv) { return lspace::cli::run(argc, argv, std::cout, std::cerr); }
