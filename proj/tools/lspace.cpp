#include <iostream>

#include "lspace/cli.hpp"

int main(int argc, char** argv) {
  return lspace::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
