#include <iostream>
#include <string>
#include <vector>

#include "indy3/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return indy3::run_cli(args, std::cout, std::cerr);
}
