#include "bergex/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return bergex::cli::run(argc, argv, std::cout, std::cerr);
}
