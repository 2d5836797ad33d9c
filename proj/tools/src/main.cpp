#include <iostream>

#include "eulerlax_tools/cli.hpp"

int main(int argc, char** argv) {
  return eulerlax::tools::run_cli(argc, argv, std::cout, std::cerr);
}
