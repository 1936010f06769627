#include <string>
#include <vector>

#include "aimtk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return aimtk::cli::run(args);
}
