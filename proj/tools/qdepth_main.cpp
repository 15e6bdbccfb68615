#include <iostream>
#include <string>
#include <vector>

#include "qdepth/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qdepth::cli::run(args, std::cout, std::cerr, std::cin);
}
