#include <iostream>
#include <string>
#include <vector>

#include "ppq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ppq::cli::run(args, std::cout, std::cerr);
}
