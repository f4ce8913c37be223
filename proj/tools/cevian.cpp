#include <iostream>

#include "cevian/cli.hpp"

int main(int argc, char** argv) { return cevian::run_cli(argc, argv, std::cout, std::cerr); }
