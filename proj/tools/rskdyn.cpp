#include <iostream>
#include <string>
#include <vector>

#include "rskdyn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rskdyn::cli::run(args, std::cout, std::cerr);
}
