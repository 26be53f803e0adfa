#include "hardylab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hardylab::run(argc, argv, std::cout, std::cerr); }
