#include <iostream>
#include <string>
#include <vector>

#include "vbraid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vbraid::cli::run(args, std::cout, std::cerr);
}
