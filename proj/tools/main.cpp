#include <iostream>
#include <string>
#include <vector>

#include "mcf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return mcf::cli::run(args, std::cout, std::cerr);
}
