#include <iostream>

#include "sierp/cli.hpp"

int main(int argc, char** argv) {
  return sierp::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
