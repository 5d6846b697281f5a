#include <iostream>

#include "critfix/cli.hpp"

int main(int argc, char** argv) { return critfix::run(argc, argv, std::cout, std::cerr); }
