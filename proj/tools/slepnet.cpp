#include <iostream>
#include <string>
#include <vector>

#include "slepnet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return slepnet::cli::run(args, std::cout, std::cerr);
}
