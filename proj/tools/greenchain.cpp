#include "greenchain/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return greenchain::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
