#include <cstdlib>
#include <iostream>

#include "qsdiag/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env_tol;
  if (const char* t = std::getenv("QSDIAG_TOL")) env_tol = t;
  return qsd::run_cli(args, std::cout, std::cerr, env_tol);
}
