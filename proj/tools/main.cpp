#include <iostream>

#include "monocrystal/cli.hpp"

int main(int argc, char** argv)
{
    return monocrystal::cli::run(argc, argv, std::cout, std::cerr);
}
