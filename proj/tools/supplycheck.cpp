#include <iostream>

#include "supply/cli.hpp"

int main(int argc, char** argv) {
  return supply::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
