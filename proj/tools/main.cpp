#include "metacert/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <unistd.h>

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    const metacert::cli::Terminal terminal{isatty(STDOUT_FILENO) != 0 && std::getenv("NO_COLOR") == nullptr};
    return metacert::cli::run_cli(args, std::cout, std::cerr, terminal);
}
