#pragma once

#include "qcycle/json_io.hpp"

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace qc {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  uint64_t seed = 20261017;
  // ids to run; empty means all
  std::vector<int> only;
  // where to write the conventions table (empty: do not write)
  std::string conventions_out;
};

struct AcceptanceRun {
  std::vector<CriterionResult> results;
  json conventions;
  bool all_pass() const;
};

// Runs the criteria in order, printing one line per criterion to out as each finishes.
AcceptanceRun run_acceptance(const AcceptanceOptions& opt, std::ostream* out);
std::string format_result(const CriterionResult& r);

}  // namespace qc
