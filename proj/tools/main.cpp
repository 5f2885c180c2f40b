#include <iostream>
#include <string>
#include <vector>

#include "ebetti/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return ebetti::run_cli(args, std::cout, std::cerr);
}
