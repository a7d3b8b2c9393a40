#include <iostream>
#include <string>
#include <vector>

#include "bergdir/cli.hpp"

int main(int argc, char** argv) {
  return bergdir::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
