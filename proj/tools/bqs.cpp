#include <iostream>

#include "bqs/cli.hpp"

int main(int argc, char** argv) { return bqs::run(argc, argv, std::cout, std::cerr); }
