#include <iostream>
#include <string>
#include <vector>

#include "moebius/cli/commands.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return moebius::cli::run(args, std::cout, std::cerr);
}
