#include <iostream>

#include "bigmcg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bigmcg::cli::run(args, std::cout, std::cerr);
}
