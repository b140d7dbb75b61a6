#include <iostream>
#include <string>
#include <vector>

#include "gmnrep/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gmnrep::run(args, std::cout, std::cerr);
}
