#include <hypertrans/cli.hpp>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return ht::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
