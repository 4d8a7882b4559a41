#include <iostream>

#include "helios/cli.hpp"

int main(int argc, char** argv) {
  return helios::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
