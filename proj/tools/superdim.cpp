#include <iostream>

#include "superdim/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return superdim::cli::run(args, std::cout, std::cerr);
}
