#include <iostream>

#include "fanofol/cli.hpp"

int main(int argc, char** argv) { return fanofol::run_cli(argc, argv, std::cout, std::cerr); }
