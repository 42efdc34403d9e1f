#include <iostream>

#include "moment_forge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return moment_forge::cli::run(args, std::cout, std::cerr);
}
