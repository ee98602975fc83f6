#include <iostream>

#include "unigate/cli.hpp"

int main(int argc, char** argv) { return unigate::run_cli(argc, argv, std::cout, std::cerr); }
