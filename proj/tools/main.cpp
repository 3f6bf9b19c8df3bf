#include <iostream>

#include "ajt/cli.hpp"

int main(int argc, char** argv) {
  return ajt::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
