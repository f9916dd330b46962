#include <vector>

#include "polyhecke/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return polyhecke::cli::run(args);
}
