#include <iostream>

#include "nesto/driver.hpp"

int main(int argc, char** argv) { return nesto::run_cli(argc, argv, std::cout, std::cerr); }
