#pragma once
// Extremal-structure quantities: the Jung-type ratio bound, how close a set
// gets to it, weight-concentration diagnostics, and separated-subset
// extraction. Every threshold comparison runs in alpha-power scale.

#include <optional>
#include <vector>

#include "lpx/chebyshev.hpp"
#include "lpx/space.hpp"

namespace lpx {

// max{2^(1/p - 1), 2^(-1/p)} for 1 <= p < inf: the sharp upper bound on
// radius/diameter. Equals 2^(-1/alpha_exponent(p)) on (1, inf).
double jung_constant(double p);

enum class Extremality {
  kSelfExtremalWithinTol,  // |ratio - jung| <= class_tol
  kSubextremal,
};

struct ExtremalityReport {
  double radius = 0.0;
  double diameter = 0.0;
  double ratio = 0.0;   // radius / diameter
  double jung = 0.0;
  double margin = 0.0;  // jung - ratio
  double tol = 0.0;     // classification band used
  Extremality cls = Extremality::kSubextremal;
  ChebyshevSolution solution;
};

// Classifies radius/diameter against the Jung constant. Zero diameter is
// rejected (the ratio is undefined for a single repeated point).
ExtremalityReport extremality_ratio(const PointSet& set, const SolverConfig& cfg = {});

// jung(p) * diameter - relative radius; strictly positive for finite sets.
double gulevich_margin(const PointSet& set, const SolverConfig& cfg = {});

struct HeavyIndexReport {
  // mean_power_distance[j] = sum_i w_i ||y_i - y_j||^alpha.
  std::vector<double> mean_power_distance;
  double threshold = 0.0;                // 2 r^a (1 - sqrt(1 - r^a))
  std::vector<std::size_t> heavy;        // indices with mean power distance >= threshold
  double residual_weight = 0.0;          // 1 - sum of heavy weights
  double radius_used = 0.0;
};

// Weight-concentration diagnostic for a configuration with radius r in
// (0, 1]: points whose weighted mean alpha-power distance clears the
// threshold carry all but `residual_weight` of the mass. The sqrt argument
// is clamped at zero so r = 1 (up to rounding) stays legal.
HeavyIndexReport heavy_indices(const PointSet& set, const SimplexWeights& w, double r);

// Indices i with ||y_i - y_j||^alpha >= delta_alpha (so j itself appears only
// when delta_alpha <= 0).
std::vector<std::size_t> neighbor_indices(const PointSet& set, std::size_t j, double delta_alpha);

struct SimplexWitness {
  std::vector<std::size_t> vertices;  // m+1 indices, ascending
  double min_edge = 0.0;              // smallest pairwise distance among them
  double epsilon_used = 0.0;
  int m = 0;
};

// Finds m+1 points with pairwise distances >= diameter - epsilon. The greedy
// chain (lowest-index pick inside the running neighbor intersection, restart
// over start points) is tried first; a depth-first completion then decides
// the remaining instances exactly, so a witness is returned iff one exists.
// Requires m >= 1 and 0 < epsilon < diameter; an empty optional means no such
// simplex exists.
std::optional<SimplexWitness> extract_simplex(const PointSet& set, int m, double epsilon);

// Greedy maximal delta-separated subset, scanning indices in ascending order.
// Requires delta > 0.
std::vector<std::size_t> separated_subset(const PointSet& set, double delta);

}  // namespace lpx
