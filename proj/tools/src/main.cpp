#include <iostream>

#include "wms_cli/commands.hpp"

int main(int argc, char** argv)
{
    return wms::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
