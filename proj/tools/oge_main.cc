#include <iostream>

#include "oge/cli.h"

int main(int argc, char** argv) {
  return oge::RunCli({argv + 1, argv + argc}, std::cout, std::cerr);
}
