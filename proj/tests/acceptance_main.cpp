// Acceptance-suite driver: prints one pass/fail line per criterion and exits
// nonzero if any criterion that ran has failed.
//
//   acceptance [--criterion N]... [--threads T] [--seed S]

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "lpx/certify.hpp"

int main(int argc, char** argv) {
  lpx::certify::AcceptanceOptions opts;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      opts.only.push_back(std::atoi(argv[++i]));
    } else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) {
      opts.threads = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      opts.seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion N]... [--threads T] [--seed S]\n");
      return 2;
    }
  }

  const auto results = lpx::certify::run_acceptance(opts);
  if (results.empty()) {
    std::fprintf(stderr, "no matching criteria\n");
    return 2;
  }
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    std::printf("criterion %2d (%s): %s  [%.2fs]\n    %s\n", r.id, r.name.c_str(),
                r.passed ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
  }
  return all ? 0 : 1;
}
