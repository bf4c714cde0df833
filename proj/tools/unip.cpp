#include <iostream>

#include "unip/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return unip::run(args, std::cout, std::cerr);
}
