#include <iostream>

#include "cdirac_cli/cli.hpp"

int main(int argc, char** argv) {
  return cdirac::cli::run(argc, argv, std::cout, std::cerr);
}
