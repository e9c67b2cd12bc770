#pragma once
// Chebyshev radii and centers: smallest covering-ball radius with the center
// either restricted to the convex hull of a point list or free in the space.
//
// The minimizer is found by projected subgradient descent over the weight
// simplex (steps c/sqrt(k) within a round, the constant halved once a round
// stops improving at its scale, running-best iterate kept). The round
// restarts give the scheme linear convergence on these max-of-norms
// objectives, which the plain one-schedule method cannot reach in a sane
// iteration budget. A final polish alternates exact line searches along the
// simplex edges with steps against the min-norm element of the active
// subdifferential, which settles ties the subgradient phase cannot resolve.

#include <cstdint>
#include <optional>
#include <vector>

#include "lpx/space.hpp"

namespace lpx {

struct SolverConfig {
  double tolerance = 1e-6;    // absolute target accuracy on the radius
  double active_tol = 1e-5;   // membership slack for the equidistant core
  int max_iters = 50000;      // total subgradient iterations across rounds
  double step = 0.7;          // initial per-iteration displacement scale
  std::uint64_t seed = 0;     // reserved for random restarts
  int restarts = 0;           // extra randomized starts (0 = deterministic only)
  double class_tol = 1e-3;    // extremality classification band, see extremal.hpp
};

struct ChebyshevSolution {
  double radius = 0.0;
  Point center;
  // Hull coordinates of the center; absent for the ambient (unconstrained)
  // problem where the center is not a combination of the inputs.
  std::optional<SimplexWeights> weights;
  int iterations = 0;
  double gap_estimate = 0.0;  // crude upper bound on the remaining optimality gap
  bool converged = true;      // step schedule exhausted within max_iters
};

// min over y in conv(points) of max_i ||x_i - y||.
ChebyshevSolution relative_radius(const PointSet& points, const SolverConfig& cfg = {});

// Same objective with the center ranging over conv(hull) while the max runs
// over `targets`. Both sets must live in the identical space. This is the
// general form behind relative_radius and the split-family diagnostics.
ChebyshevSolution radius_over_hull(const PointSet& targets, const PointSet& hull,
                                   const SolverConfig& cfg = {});

// min over all z in the space of max_i ||x_i - z||. Never exceeds the
// relative radius; the solver starts from the barycenter and additionally
// seeds itself with the hull-restricted solution so the dominance survives
// finite-precision optimization.
ChebyshevSolution ambient_radius(const PointSet& points, const SolverConfig& cfg = {});

struct EquidistantCore {
  std::vector<std::size_t> indices;  // into the input set, ascending
  ChebyshevSolution solution;        // solve on the surviving subset
  bool cycled = false;               // oscillation guard tripped; best round returned
  int rounds = 0;
};

// Iteratively re-solve and drop points lying more than active_tol inside the
// covering sphere until every survivor is within active_tol of the radius.
// Needs at least 2 points.
EquidistantCore equidistant_core(const PointSet& points, const SolverConfig& cfg = {});

// Euclidean projection onto the probability simplex (exposed for tests).
std::vector<double> project_to_simplex(std::vector<double> v);

}  // namespace lpx
