#pragma once
// Generators for structured and random point families with known metric
// facts, used to exercise the solvers near the extremal regime.

#include <cstdint>

#include "lpx/chebyshev.hpp"
#include "lpx/space.hpp"

namespace lpx::gallery {

// n unit-measure cells, point i the indicator of cell i. Needs p >= 2 and
// n >= 2; every pairwise distance is 2^(1/p) and the covering radius of the
// truncation has the closed form below.
PointSet indicator_family(int n, double p);

// ((1 - 1/n)^p + (n-1)/n^p)^(1/p): the distance from each indicator point to
// the family barycenter, which symmetry makes the optimal center.
double indicator_truncation_radius(int n, double p);

// First n sign generators on the dyadic grid with 2^K cells of measure 2^-K.
// Generator i alternates +1/-1 on consecutive blocks of length 2^(K-i-1),
// starting with +1. Needs 1 < p < 2 and K >= n (deeper generators are not
// representable on the grid). All pairwise distances equal 2^(1 - 1/p).
PointSet rademacher_family(int n, double p, int K);

// Default grid depth for the CLI: max(n, 6).
int rademacher_default_depth(int n);

struct HoldoutRadius {
  ChebyshevSolution solution;
  int hull_count = 0;      // generators spanning the allowed centers
  int withheld = 0;        // index of the generator excluded from the hull
};

// Covering radius of {g_0..g_L} measured from centers restricted to
// conv{g_0..g_(L-1)}, where L = min(n, K-1) is the deepest representable
// generator at the requested truncation. The withheld generator integrates
// to zero against every allowed center, which forces the value >= 1; it
// decreases toward 1 as the truncation grows.
HoldoutRadius rademacher_holdout(int n, double p, int K, const SolverConfig& cfg = {});

// Seeded random configuration: `cells` measures drawn uniformly from
// [0.1, 2], coefficients uniformly from [lo, hi]. Bit-reproducible across
// platforms (raw generator output, no library distributions).
PointSet random_family(std::uint64_t seed, int n, int cells, double p, double lo = -3.0,
                       double hi = 3.0);

}  // namespace lpx::gallery
