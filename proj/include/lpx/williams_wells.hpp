#pragma once
// Convexity-exponent inequality for weighted point configurations:
//   2 sum_i t_i ||x_i - m(t)||^a  <=  sum_{i,j} t_i t_j ||x_i - x_j||^a
// with m(t) the convex combination and a = alpha_exponent(p). Both sides and
// their gap are exposed; a negative gap (beyond rounding) would falsify the
// inequality and is what the certification suite hunts for.

#include <utility>

#include "lpx/space.hpp"

namespace lpx::ww {

// (lhs, rhs) evaluated with fixed index-ascending order and compensated sums,
// so results are bit-reproducible for a given input.
std::pair<double, double> ww_sides(const PointSet& set, const SimplexWeights& t);

// rhs - lhs; nonnegative up to rounding for every valid configuration.
double ww_gap(const PointSet& set, const SimplexWeights& t);

// Copy of the configuration with (near-)zero-weight points removed. Entries
// below `eps` are treated as exact zeros; remaining weights are renormalized
// by their own sum (a no-op when the dropped mass is exactly zero).
std::pair<PointSet, SimplexWeights> drop_zero_weights(const PointSet& set,
                                                      const SimplexWeights& t,
                                                      double eps = 1e-15);

}  // namespace lpx::ww
