#include <iostream>

#include "grossone/commands.hpp"

int main(int argc, char** argv) { return grossone::cli::run(argc, argv, std::cout, std::cerr); }
