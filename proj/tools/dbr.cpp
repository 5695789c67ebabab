#include <iostream>
#include <vector>

#include "dbr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dbr::run_cli(args, std::cout, std::cerr);
}
