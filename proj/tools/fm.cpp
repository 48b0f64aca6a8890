#include <iostream>
#include <vector>

#include "facemonoid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fm::run_cli(args, std::cout, std::cerr);
}
