#include <iostream>

#include "app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return warpspec::cli::run_app(args, std::cout, std::cerr);
}
