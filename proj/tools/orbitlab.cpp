#include <iostream>
#include <string>
#include <vector>

#include "orbitlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return orbitlab::cli::run(args, std::cout, std::cerr);
}
