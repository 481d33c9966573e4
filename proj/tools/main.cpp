#include <iostream>

#include "symdyn/cli.hpp"

int main(int argc, char** argv) { return symdyn::dispatch(argc, argv, std::cout, std::cerr); }
