#include <iostream>
#include <vector>

#include "ramdepth/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ramdepth::run(args, std::cout, std::cerr);
}
