#include <iostream>
#include <string>
#include <vector>

#include "kemeny/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kemeny::cli::run_command_line(args, std::cout, std::cerr);
}
