#include "qcycle/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  qc::AcceptanceOptions opt;
  opt.conventions_out = "conventions.json";
  for (int a = 1; a < argc; ++a) opt.only.push_back(std::atoi(argv[a]));
  qc::AcceptanceRun run = qc::run_acceptance(opt, &std::cout);
  return run.all_pass() ? 0 : 1;
}
