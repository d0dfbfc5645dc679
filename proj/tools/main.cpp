#include "tropbal/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tropbal::cli::run(argc, argv, std::cout, std::cerr); }
