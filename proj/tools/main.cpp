#include <iostream>
#include <string>
#include <vector>

#include "expg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return expg::run_cli(args, std::cout, std::cerr);
}
