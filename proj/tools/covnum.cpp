#include <iostream>

#include "covnum/cli.hpp"

int main(int argc, char** argv) {
  return covnum::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
