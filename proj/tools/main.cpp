#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return erdos_straus::cli::run(argc, argv, std::cout, std::cerr);
}
