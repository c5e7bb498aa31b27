#include <iostream>
#include <string>
#include <vector>

#include "jdeblock/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jdeblock::cli::run(args, std::cout, std::cerr);
}
