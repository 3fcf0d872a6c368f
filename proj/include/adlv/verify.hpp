#pragma once

#include <string>
#include <vector>

namespace adlv {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;
};

// Library-level checks 1..8 (9 is determinism of the CLI itself and lives with
// the CLI/acceptance harness).
CriterionResult run_criterion(int id);

// All of 1..8 in order; parallelism bounded by ADLV_THREADS (default 1),
// results deterministic regardless of thread count.
std::vector<CriterionResult> run_all_criteria();

// The (m, n) pairs and d range of the verification grid.
struct GridCase {
  long long m;
  int n;
  int d;
  std::vector<long long> m_vec;
};
std::vector<GridCase> verification_grid();

}  // namespace adlv
