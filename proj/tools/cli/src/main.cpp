#include <iostream>
#include <string>
#include <vector>

#include "barysimplex/cli/run.hpp"

int main(int argc, char** argv) {
  return barysimplex::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
