#include <iostream>

#include "dpi2/cli.hpp"

int main(int argc, char** argv) { return dpi2::run(argc, argv, std::cout, std::cerr); }
