#include <iostream>
#include <string>
#include <vector>

#include "lyubgraph/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return lyubgraph::cli::run(args, std::cout, std::cerr);
}
