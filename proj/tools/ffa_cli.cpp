#include <iostream>

#include "ffa/cli.hpp"

int main(int argc, char** argv) { return ffa::cli::main_entry(argc, argv, std::cout, std::cerr); }
