#include <iostream>

#include "qfrob/cli.hpp"

int main(int argc, char** argv) { return qfrob::run_cli(argc, argv, std::cout, std::cerr); }
