#include <iostream>
#include <string>
#include <vector>

#include "fbcs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fbcs::cli::run(args, std::cout, std::cerr);
}
