#include <iostream>

#include "lexraf/cli.hpp"

int main(int argc, char** argv) {
  return lexraf::cli::run(argc, argv, std::cout, std::cerr);
}
