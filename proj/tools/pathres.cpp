#include <iostream>

#include "pathres/cli.hpp"

int main(int argc, char** argv) { return pathres::run(argc, argv, std::cout, std::cerr); }
