#include <iostream>

#include "hopftwist/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hopftwist::run_cli(args, std::cout, std::cerr);
}
