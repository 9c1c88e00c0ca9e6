#include <iostream>

#include "balcheck/cli.hpp"

int main(int argc, char** argv) {
    return balcheck::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
