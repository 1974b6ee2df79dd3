#include <iostream>
#include <string>
#include <vector>

#include "interlock/cli.hpp"

int main(int argc, char** argv) {
  return interlock::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
