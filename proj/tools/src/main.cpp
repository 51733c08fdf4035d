#include <iostream>

#include "dmod/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dmod::cli::run(args, std::cout, std::cerr);
}
