#include <iostream>
#include <string>
#include <vector>

#include "urprior/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return urprior::run_cli(args, std::cout, std::cerr);
}
