#include <iostream>

#include "tiltstab/cli.hpp"

int main(int argc, char** argv) {
  return tiltstab::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
