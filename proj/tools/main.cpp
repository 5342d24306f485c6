#include <iostream>
#include <string>
#include <vector>

#include <geodstab/geodstab.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return geodstab::cli::run(args, std::cout, std::cerr);
}
