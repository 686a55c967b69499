#include <iostream>

#include "peerrate/cli.hpp"

int main(int argc, char** argv) {
  return peerrate::cli::run(argc, argv, std::cout, std::cerr);
}
