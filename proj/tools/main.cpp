#include <iostream>
#include <string>
#include <vector>

#include "actsep/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return actsep::run_cli(args, std::cout, std::cerr);
}
