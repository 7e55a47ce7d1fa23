#include "flagkernel/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = flagkernel::cli::dispatch(args, std::cout, std::cerr);
    return static_cast<int>(result.exit_code);
}
