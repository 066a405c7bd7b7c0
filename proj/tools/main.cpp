#include <iostream>
#include <string>
#include <vector>

#include "krorb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return krorb::run_cli(args, std::cin, std::cout, std::cerr);
}
