#include <iostream>

#include "jordan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jordan::run_cli(args, std::cout, std::cerr);
}
