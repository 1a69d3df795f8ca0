#include <iostream>
#include <string>
#include <vector>

#include "minneg/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return minneg::cli::run(args, std::cout, std::cerr);
}
