#include "barth/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  barth::init_logging();
  return barth::run_command({argv + 1, argv + argc}, std::cout, std::cerr);
}
