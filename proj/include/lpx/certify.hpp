#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lpx::certify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;    // measured quantities, counts, and failure causes
  double seconds = 0.0;  // wall time of the criterion body
};

struct AcceptanceOptions {
  std::vector<int> only;          // criterion ids to run; empty = all ten
  int threads = 0;                // 0 = auto; capped by LP_EXTREMAL_THREADS
  std::uint64_t seed = 20260818;  // base seed for every randomized criterion
};

// Resolves a requested thread count against hardware_concurrency and the
// LP_EXTREMAL_THREADS environment variable. Always returns >= 1.
int thread_budget(int requested);

// Runs the acceptance criteria (in parallel up to the thread budget) and
// returns one result per criterion, ordered by id.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

}  // namespace lpx::certify
