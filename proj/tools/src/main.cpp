#include <iostream>

#include "jkprove_cli/cli.hpp"

int main(int argc, char** argv) {
  return jkprove::cli::run_cli(argc, argv, std::cout, std::cerr);
}
