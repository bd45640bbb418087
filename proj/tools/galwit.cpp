#include "galwit/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return galwit::cli::run(argc, argv, std::cout, std::cerr);
}
