#include <iostream>
#include <string>
#include <vector>

#include "chinampa/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chinampa::run_cli(args, std::cout, std::cerr);
}
