#include <iostream>

#include "pipeline.hpp"

int main(int argc, char** argv) { return jforge::cli::main_entry(argc, argv, std::cout, std::cerr); }
