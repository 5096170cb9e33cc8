#include <iostream>
#include <string>
#include <vector>

#include "gridcomm/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return gridcomm::cli::run(args, std::cout, std::cerr);
}
