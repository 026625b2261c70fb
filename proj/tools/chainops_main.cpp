#include <iostream>
#include <string>
#include <vector>

#include "chainops/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return chainops::cli::run(args, std::cout, std::cerr);
}
