#include <string>
#include <vector>

#include "qhook/runner.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qhook::run_cli(args);
}
