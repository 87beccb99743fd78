#include "germ2/dispatch.hpp"
#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return germ2::dispatch(args, std::cout, std::cerr);
}
