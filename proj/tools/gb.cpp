#include <iostream>
#include <string>
#include <vector>

#include "eugb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eugb::runCli(args, std::cout, std::cerr);
}
