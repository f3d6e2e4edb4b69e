#include <iostream>

#include "wfid/cli.hpp"

int main(int argc, char** argv) { return wfid::cli::run(argc, argv, std::cout, std::cerr); }
