#include <iostream>
#include <string>
#include <vector>

#include "lcfano/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lcfano::run_cli(args, std::cout, std::cerr);
}
