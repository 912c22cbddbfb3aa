#include <iostream>

#include "noriq_cli/commands.hpp"

int main(int argc, char** argv) { return noriq::cli::run(argc, argv, std::cout, std::cerr); }
