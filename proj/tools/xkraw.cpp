#include <iostream>
#include <string>
#include <vector>

#include "xkraw/cli_io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return xkraw::cli::run(args, std::cout, std::cerr);
}
