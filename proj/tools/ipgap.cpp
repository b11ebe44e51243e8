#include "ipgap/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ipgap::run_cli(argc, argv, std::cout, std::cerr); }
