#pragma once
// Small numeric helpers shared across the library.

#include <cmath>
#include <cstdint>
#include <random>

namespace lpx::detail {

// |a|^e with cheap exact paths for the exponents that dominate our workloads.
inline double pow_abs(double a, double e) {
  a = std::fabs(a);
  if (e == 2.0) return a * a;
  if (e == 3.0) return a * a * a;
  if (e == 1.5) return a * std::sqrt(a);
  if (e == 1.0) return a;
  if (e == 0.5) return std::sqrt(a);
  if (e == 4.0) {
    double s = a * a;
    return s * s;
  }
  return std::pow(a, e);
}

// Compensated (Kahan) accumulator; keeps long, near-cancelling sums stable
// and makes the summation order the only thing that matters.
class KahanSum {
 public:
  void add(double x) {
    double y = x - carry_;
    double t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// Uniform draws built from raw 64-bit generator output so values do not
// depend on a standard library's distribution implementation.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

// Inclusive integer draw; modulo bias is irrelevant for test-data ranges.
inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace lpx::detail
