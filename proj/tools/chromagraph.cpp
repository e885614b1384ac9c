#include <iostream>
#include <string>
#include <vector>

#include "chromagraph/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chromagraph::run_cli(args, std::cout, std::cerr);
}
