#include <iostream>

#include "imc/commands.hpp"

int main(int argc, char** argv) { return imc::cli::run(argc, argv, std::cout, std::cerr); }
