#include <iostream>
#include <string>
#include <vector>

#include "liewild/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return liewild::cli::run(args, std::cout, std::cerr);
}
