#include <iostream>
#include <string>
#include <vector>

#include "mrt/cli.hpp"

int main(int argc, char** argv) {
  return mrt::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
