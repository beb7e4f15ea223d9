#include <iostream>
#include <vector>

#include "clusterkl/cli.hpp"
#include "clusterkl/parallel.hpp"

int main(int argc, char** argv) {
  ckl::apply_thread_env();
  std::vector<std::string> args(argv + 1, argv + argc);
  return ckl::run_cli(args, std::cout, std::cerr);
}
