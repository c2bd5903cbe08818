#include <iostream>
#include <string>
#include <vector>

#include "hallwheels/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hallwheels::run(args, std::cout, std::cerr);
}
