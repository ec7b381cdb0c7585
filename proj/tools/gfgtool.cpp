#include <iostream>
#include <string>
#include <vector>

#include "gfg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gfg::run_cli(args, std::cout, std::cerr);
}
