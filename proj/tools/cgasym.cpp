#include <iostream>

#include "cgasym/cli.hpp"

int main(int argc, char** argv) { return cgasym::cli::run(argc, argv, std::cout, std::cerr); }
