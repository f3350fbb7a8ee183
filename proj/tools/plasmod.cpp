#include <iostream>
#include <string>
#include <vector>

#include "plasmod/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return plasmod::cli_main(args, std::cout, std::cerr);
}
