#include <iostream>
#include <string>
#include <vector>

#include "lrs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lrs::runCli(args, std::cout, std::cerr);
}
