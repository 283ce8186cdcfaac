#include "amoeba/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return amoeba::cli::run_cli(argc, argv, std::cout, std::cerr);
}
