#include "packing/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
	std::vector<std::string> args(argv + 1, argv + argc);
	auto outcome = packing::cli::run(args, std::cin);
	std::cout << outcome.out;
	std::cerr << outcome.err;
	return outcome.exit;
}
