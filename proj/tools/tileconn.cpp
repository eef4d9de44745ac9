#include <iostream>
#include <string>
#include <vector>

#include "tileconn/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tileconn::cli::run(args, std::cout, std::cerr);
}
