#include <iostream>
#include <string>
#include <vector>

#include "specta/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return specta::cli::run(args, std::cout, std::cerr);
}
