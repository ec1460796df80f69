#include <iostream>

#include "exotic/cli.hpp"

int main(int argc, char** argv) { return exotic::run_cli(argc, argv, std::cout, std::cerr); }
