#include <iostream>

#include "sonckit/cli.hpp"

int main(int argc, char** argv) { return sonckit::cli::run(argc, argv, std::cout, std::cerr); }
