#include <string>
#include <vector>

#include "lcr/cli.hpp"

int main(int argc, char** argv)
{
    return lcr::cli::run(std::vector<std::string>(argv, argv + argc));
}
