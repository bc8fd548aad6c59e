#include <iostream>

#include "hstar/cli.hpp"

int main(int argc, char** argv) { return hstar::run(argc, argv, std::cout, std::cerr); }
