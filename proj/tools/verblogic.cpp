#include "verblogic/app/cli.hpp"

#include <unistd.h>

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    // Piped input gets a full transcript; a terminal already shows what was typed.
    const bool transcript = !isatty(STDIN_FILENO);
    return verblogic::app::run(args, std::cin, std::cout, std::cerr, transcript);
}
