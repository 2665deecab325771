#include <iostream>
#include <string>
#include <vector>

#include "sheafwc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sheafwc::cli::run(args, std::cout, std::cerr);
}
