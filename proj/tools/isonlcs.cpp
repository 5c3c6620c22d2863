#include <iostream>
#include <string>
#include <vector>

#include "isonlcs/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return isonlcs::cli::main_entry(args, std::cerr);
}
