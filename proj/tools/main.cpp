#include <iostream>

#include "flopk_cli/cli.hpp"

int main(int argc, char** argv) {
  return flopk::cli::main_entry(argc, argv, std::cout, std::cerr);
}
