#pragma once
// Brute-force reference computations. Deliberately dumb and slow: these are
// the ground truth the optimizing code is certified against, so they never
// call the solvers.

#include <cstddef>
#include <vector>

#include "lpx/space.hpp"

namespace lpx::oracle {

// Smallest covering radius over the weight grid {k/resolution}: every
// composition of `resolution` into one part per point is tried as a convex
// combination and the max distance back to the set is minimized.
// At most 5 points; the value upper-bounds the true radius and converges to
// it as the resolution grows.
double grid_radius(const PointSet& set, int resolution);

struct BestSimplex {
  double best_min_edge = 0.0;            // max over (m+1)-subsets of min pairwise distance
  std::vector<std::size_t> vertices;     // lexicographically smallest attaining subset
};

// Exhaustive max-min-edge search over all (m+1)-point subsets.
// Guards: at most 12 points, 1 <= m <= 4, m+1 <= point count.
BestSimplex exhaustive_simplex(const PointSet& set, int m);

// Full symmetric distance matrix with zero diagonal.
std::vector<std::vector<double>> pairwise_table(const PointSet& set);

}  // namespace lpx::oracle
