#pragma once
// Finite weighted discretizations of L_p: spaces, points, norms, hull combos.
//
// A space is a list of positive cell measures mu_k together with an exponent
// p in (1, 64]. A point assigns one coefficient per cell and
//   ||v|| = (sum_k mu_k |v_k|^p)^(1/p).

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace lpx {

// Absolute tolerance for pure arithmetic identities.
inline constexpr double kIdentityTol = 1e-12;

// Default cap on the exponent; beyond this |.|^p overflows/underflows too
// easily to certify anything.
inline constexpr double kDefaultMaxP = 64.0;

// Convexity exponent used by the inequality machinery:
// p/(p-1) on (1,2], p on [2,inf). Both branches give 2 at p = 2.
// Throws std::domain_error outside (1, inf).
double alpha_exponent(double p);

class WeightedSpace {
 public:
  // Validates 1 < p <= max_p, at least one cell, every measure finite and > 0.
  WeightedSpace(double p, std::vector<double> cells, double max_p = kDefaultMaxP);

  double p() const noexcept { return p_; }
  double alpha() const noexcept { return alpha_; }
  std::size_t dim() const noexcept { return cells_.size(); }
  const std::vector<double>& cells() const noexcept { return cells_; }

  bool operator==(const WeightedSpace&) const = default;

 private:
  double p_ = 2.0;
  double alpha_ = 2.0;
  std::vector<double> cells_;
};

struct Point {
  std::vector<double> coeffs;

  Point() = default;
  explicit Point(std::vector<double> c) : coeffs(std::move(c)) {}
  Point(std::initializer_list<double> c) : coeffs(c) {}

  std::size_t dim() const noexcept { return coeffs.size(); }
  double operator[](std::size_t k) const noexcept { return coeffs[k]; }
  double& operator[](std::size_t k) noexcept { return coeffs[k]; }
};

// Convex-combination weights: non-negative, summing to 1 within 1e-12.
class SimplexWeights {
 public:
  explicit SimplexWeights(std::vector<double> w);
  static SimplexWeights uniform(std::size_t n);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

 private:
  std::vector<double> values_;
};

// A non-empty list of points living in one space. Construction validates
// matching dimensions and finite coefficients.
class PointSet {
 public:
  PointSet(WeightedSpace space, std::vector<Point> points);

  const WeightedSpace& space() const noexcept { return space_; }
  const std::vector<Point>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const Point& operator[](std::size_t i) const noexcept { return points_[i]; }

  // New set holding points_[i] for i in `indices` (order kept, must be
  // non-empty and in range).
  PointSet subset(const std::vector<std::size_t>& indices) const;

 private:
  WeightedSpace space_;
  std::vector<Point> points_;
};

double norm(const WeightedSpace& space, const Point& v);
double distance(const WeightedSpace& space, const Point& a, const Point& b);

// ||a-b||^alpha computed without the p-th-root/alpha-power round trip when
// p >= 2 (there alpha == p, so the weighted coefficient sum already is the
// alpha-power). Threshold comparisons all run in this power scale.
double distance_alpha_pow(const WeightedSpace& space, const Point& a, const Point& b);

// Max pairwise distance; 0 for a single point.
double diameter(const PointSet& set);

// sum_j w_j x_j; weight count must match the point count.
Point combine(const PointSet& set, const SimplexWeights& w);

// Uniform-weight combination.
Point barycenter(const PointSet& set);

}  // namespace lpx
