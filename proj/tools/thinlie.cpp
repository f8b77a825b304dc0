#include <iostream>

#include "thinlie/cli.hpp"

int main(int argc, char** argv) { return thinlie::cli::run(argc, argv, std::cout, std::cerr); }
