#include <iostream>

#include "cremona/cli.hpp"

int main(int argc, char** argv) {
  return cremona::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
