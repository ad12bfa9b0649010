#include <iostream>

#include "ybe/cli.hpp"

int main(int argc, char** argv) {
  return ybe::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
