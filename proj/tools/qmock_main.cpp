#include <iostream>

#include "qmock/cli/cli.hpp"

int main(int argc, char** argv) {
  // A failed write (closed pipe, full disk) surfaces as an internal error.
  std::cout.exceptions(std::ios::badbit);
  return qmock::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
