#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "doomlc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    doomlc::cli::RunOptions options;
    options.color = std::getenv("DOOML_NO_COLOR") == nullptr && isatty(fileno(stderr)) != 0;
    return doomlc::cli::run(args, std::cout, std::cerr, options);
}
