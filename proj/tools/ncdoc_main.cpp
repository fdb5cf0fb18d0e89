#include <iostream>

#include "ncdoc/cli/cli.hpp"

int main(int argc, char** argv) {
  return ncdoc::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
