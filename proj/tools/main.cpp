#include <iostream>

#include "selfconf/cli.hpp"

int main(int argc, char** argv) {
  return selfconf::cli::run(argc, argv, std::cout, std::cerr);
}
