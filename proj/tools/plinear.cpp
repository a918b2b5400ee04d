#include <iostream>

#include "plinear/cli/commands.hpp"

int main(int argc, char** argv)
{
    return plinear::run_cli(argc, argv, std::cout, std::cerr);
}
