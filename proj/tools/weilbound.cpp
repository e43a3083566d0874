#include <iostream>

#include "weilbound/cli.hpp"

int main(int argc, char** argv) { return weilbound::run_cli(argc, argv, std::cout, std::cerr); }
