/**
 * @file qdual.cpp
 * @brief Command-line entry point.
 */
#include "qdual/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qdual::dispatch(args, std::cout, std::cerr);
}
