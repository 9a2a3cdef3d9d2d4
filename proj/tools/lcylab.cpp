#include <iostream>
#include <string>
#include <vector>

#include "lcylab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lcylab::cli::dispatch(args, std::cout, std::cerr);
}
