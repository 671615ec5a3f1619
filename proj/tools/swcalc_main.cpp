#include <iostream>
#include <vector>

#include "swcalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return swcalc::cli::run(args, std::cout, std::cerr);
}
