#include "conefj/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return conefj::run_cli(args, std::cout, std::cerr);
}
