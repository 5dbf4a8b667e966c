#include <iostream>
#include <string>
#include <vector>

#include "tribell/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return tribell::cli::run(args, std::cout, std::cerr);
}
