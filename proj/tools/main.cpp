#include <iostream>
#include <string>
#include <vector>

#include "dagger/cli.hpp"

int main(int argc, char **argv)
{
	std::vector<std::string> args(argv, argv + argc);
	return dagger::cli::run(args, std::cout, std::cerr);
}
