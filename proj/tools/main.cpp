#include <iostream>
#include <string>
#include <vector>

#include "stirling2adic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return s2a::run_cli(args, std::cout, std::cerr);
}
