#include "arrayprop/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return arrayprop::run_cli(argc, argv, std::cout, std::cerr);
}
