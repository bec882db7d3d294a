#include "altkron/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return altkron::run_cli(argc, argv, std::cout, std::cerr); }
