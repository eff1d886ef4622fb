#include <iostream>

#include "affhecke/cli.hpp"

int main(int argc, char** argv) { return affhecke::run_cli(argc, argv, std::cout, std::cerr); }
