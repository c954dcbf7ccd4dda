#include <iostream>
#include <string>
#include <vector>

#include "elp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return elp::runCli(args, std::cout, std::cerr);
}
