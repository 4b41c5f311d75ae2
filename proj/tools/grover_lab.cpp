#include <iostream>
#include <string>
#include <vector>

#include "grover/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> arguments(argv + 1, argv + argc);
  return grover::cli::run_cli(arguments, std::cout, std::cerr);
}
