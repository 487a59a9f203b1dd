#include "posethom/commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto outcome = posethom::run_command(args);
  std::cout << outcome.output;
  std::cerr << outcome.diagnostics;
  return outcome.exit_code;
}
