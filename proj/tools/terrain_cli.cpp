#include <iostream>

#include "kgon/io.hpp"

int main(int argc, char** argv) { return kgon::io::run_cli(argc, argv, std::cout, std::cerr); }
