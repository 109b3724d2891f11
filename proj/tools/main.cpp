#include <iostream>

#include "modbound/cli.hpp"

int main(int argc, char** argv) { return modbound::run_cli(argc, argv, std::cout, std::cerr); }
