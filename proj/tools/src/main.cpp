#include <hft/cli.hpp>

#include <iostream>

int main(int argc, char **argv)
{
    return hft::cli::run(argc, argv, std::cout, std::cerr);
}
