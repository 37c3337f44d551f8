#include <iostream>
#include <string>
#include <vector>

#include "tutteconv/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tutteconv::cli::run(args, std::cout, std::cerr);
}
