#include <iostream>  // for cout, cerr
#include <string>    // for string
#include <vector>    // for vector

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return agcheck::cli::run(args, std::cout, std::cerr);
}
