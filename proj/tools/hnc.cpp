#include <iostream>

#include "hnc/cli.hpp"

int main(int argc, char** argv) {
  return hnc::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
