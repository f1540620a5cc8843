#include <string>
#include <vector>

#include "forel/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return forel::run_cli(std::move(args));
}
