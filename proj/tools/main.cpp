#include <iostream>
#include <string>
#include <vector>

#include "rect_atg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return rect_atg::cli::run(args, std::cout, std::cerr);
}
