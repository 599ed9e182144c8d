#include <iostream>
#include <string>
#include <vector>

#include "noncorr/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return noncorr::cli::run(args, std::cout, std::cerr);
}
