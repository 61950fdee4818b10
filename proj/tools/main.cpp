#include <iostream>

#include "bivage/cli.hpp"

int main(int argc, char** argv) {
    return bivage::cli::run(argc, argv, std::cout, std::cerr);
}
