#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pcmc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env_workers;
  if (const char* w = std::getenv("PCMC_WORKERS")) env_workers = w;
  return pcmc::cli::run(args, env_workers, std::cout, std::cerr);
}
