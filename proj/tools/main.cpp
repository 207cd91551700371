#include <iostream>

#include "dilint/cli.hpp"

int main(int argc, char** argv) {
  return dilint::run_cli(argc, argv, std::cout, std::cerr);
}
