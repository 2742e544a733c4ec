#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    return newtonma::cli::run(argc, argv, std::cout);
}
