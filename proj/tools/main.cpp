#include <iostream>

#include "simpvol/cli.hpp"

int main(int argc, char** argv) {
  return simpvol::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
