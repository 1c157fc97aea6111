#include <iostream>

#include "algproof/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return algproof::cli::run(args, std::cout, std::cerr);
}
