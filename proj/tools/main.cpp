#include <iostream>

#include "ccmetrics/cli.hpp"

int main(int argc, char** argv) {
    return ccmetrics::cli::run(argc, argv, std::cout, std::cerr);
}
