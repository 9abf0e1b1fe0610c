#include <cstdlib>
#include <iostream>

#include "hyppants/cli.hpp"

int main(int argc, char** argv) {
  std::optional<std::string> env_tol;
  if (const char* t = std::getenv("HYPPANTS_TOL")) env_tol = t;
  return hyppants::cli::run({argv + 1, argv + argc}, std::cout, std::cerr, env_tol);
}
