#include <iostream>
#include <string>
#include <vector>

#include "cslb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cslb::cli::run(args, std::cout, std::cerr);
}
