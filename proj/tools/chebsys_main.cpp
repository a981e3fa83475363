#include <iostream>

#include "chebsys/cli.hpp"

int main(int argc, char** argv) { return chebsys::cli::run(argc, argv, std::cerr); }
