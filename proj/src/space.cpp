#include "lpx/space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lpx/numeric.hpp"

namespace lpx {

double alpha_exponent(double p) {
  if (!std::isfinite(p) || !(p > 1.0)) {
    throw std::domain_error("alpha_exponent: p must lie in (1, inf), got " + std::to_string(p));
  }
  return p <= 2.0 ? p / (p - 1.0) : p;
}

WeightedSpace::WeightedSpace(double p, std::vector<double> cells, double max_p)
    : cells_(std::move(cells)) {
  if (!std::isfinite(p) || !(p > 1.0) || !(p <= max_p)) {
    throw std::domain_error("WeightedSpace: p must lie in (1, " + std::to_string(max_p) +
                            "], got " + std::to_string(p));
  }
  if (cells_.empty()) {
    throw std::invalid_argument("WeightedSpace: need at least one cell");
  }
  for (double mu : cells_) {
    if (!std::isfinite(mu) || !(mu > 0.0)) {
      throw std::invalid_argument("WeightedSpace: cell measures must be finite and > 0");
    }
  }
  p_ = p;
  alpha_ = alpha_exponent(p);
}

SimplexWeights::SimplexWeights(std::vector<double> w) : values_(std::move(w)) {
  if (values_.empty()) {
    throw std::invalid_argument("SimplexWeights: need at least one entry");
  }
  double sum = 0.0;
  for (double& wi : values_) {
    if (!std::isfinite(wi) || wi < -1e-12) {
      throw std::invalid_argument("SimplexWeights: entries must be >= 0");
    }
    if (wi < 0.0) wi = 0.0;  // forgive projection dust
    sum += wi;
  }
  if (std::fabs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("SimplexWeights: entries must sum to 1 (off by " +
                                std::to_string(sum - 1.0) + ")");
  }
}

SimplexWeights SimplexWeights::uniform(std::size_t n) {
  if (n == 0) throw std::invalid_argument("SimplexWeights::uniform: n must be >= 1");
  return SimplexWeights(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

PointSet::PointSet(WeightedSpace space, std::vector<Point> points)
    : space_(std::move(space)), points_(std::move(points)) {
  if (points_.empty()) {
    throw std::invalid_argument("PointSet: need at least one point");
  }
  for (const Point& pt : points_) {
    if (pt.dim() != space_.dim()) {
      throw std::invalid_argument("PointSet: point dimension " + std::to_string(pt.dim()) +
                                  " does not match cell count " + std::to_string(space_.dim()));
    }
    for (double c : pt.coeffs) {
      if (!std::isfinite(c)) {
        throw std::invalid_argument("PointSet: non-finite coefficient");
      }
    }
  }
}

PointSet PointSet::subset(const std::vector<std::size_t>& indices) const {
  if (indices.empty()) {
    throw std::invalid_argument("PointSet::subset: empty index list");
  }
  std::vector<Point> picked;
  picked.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= points_.size()) {
      throw std::out_of_range("PointSet::subset: index " + std::to_string(i) + " out of range");
    }
    picked.push_back(points_[i]);
  }
  return PointSet(space_, std::move(picked));
}

namespace {

// Weighted p-power sum of |a-b| rescaled by the largest coefficient: returns
// (vmax, sum_k mu_k |(a_k-b_k)/vmax|^p). Scaling keeps |.|^p in range for
// large p without changing the exact dyadic cases the tests pin down.
std::pair<double, double> scaled_power_sum(const WeightedSpace& space, const double* a,
                                           const double* b, std::size_t n) {
  double vmax = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double d = std::fabs(b ? a[k] - b[k] : a[k]);
    if (!std::isfinite(d)) {
      throw std::invalid_argument("norm/distance: non-finite coefficient");
    }
    vmax = std::max(vmax, d);
  }
  if (vmax == 0.0) return {0.0, 0.0};
  const double p = space.p();
  const std::vector<double>& mu = space.cells();
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double d = std::fabs(b ? a[k] - b[k] : a[k]);
    sum += mu[k] * detail::pow_abs(d / vmax, p);
  }
  return {vmax, sum};
}

void check_dim(const WeightedSpace& space, const Point& v, const char* who) {
  if (v.dim() != space.dim()) {
    throw std::invalid_argument(std::string(who) + ": point dimension " + std::to_string(v.dim()) +
                                " does not match cell count " + std::to_string(space.dim()));
  }
}

}  // namespace

double norm(const WeightedSpace& space, const Point& v) {
  check_dim(space, v, "norm");
  auto [vmax, sum] = scaled_power_sum(space, v.coeffs.data(), nullptr, v.dim());
  if (vmax == 0.0) return 0.0;
  return vmax * std::pow(sum, 1.0 / space.p());
}

double distance(const WeightedSpace& space, const Point& a, const Point& b) {
  check_dim(space, a, "distance");
  check_dim(space, b, "distance");
  auto [vmax, sum] = scaled_power_sum(space, a.coeffs.data(), b.coeffs.data(), a.dim());
  if (vmax == 0.0) return 0.0;
  return vmax * std::pow(sum, 1.0 / space.p());
}

double distance_alpha_pow(const WeightedSpace& space, const Point& a, const Point& b) {
  check_dim(space, a, "distance_alpha_pow");
  check_dim(space, b, "distance_alpha_pow");
  auto [vmax, sum] = scaled_power_sum(space, a.coeffs.data(), b.coeffs.data(), a.dim());
  if (vmax == 0.0) return 0.0;
  if (space.p() >= 2.0) {
    // alpha == p: the weighted power sum is already ||a-b||^alpha.
    return detail::pow_abs(vmax, space.p()) * sum;
  }
  double dist = vmax * std::pow(sum, 1.0 / space.p());
  return detail::pow_abs(dist, space.alpha());
}

double diameter(const PointSet& set) {
  double d = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      d = std::max(d, distance(set.space(), set[i], set[j]));
    }
  }
  return d;
}

Point combine(const PointSet& set, const SimplexWeights& w) {
  if (w.size() != set.size()) {
    throw std::invalid_argument("combine: weight count " + std::to_string(w.size()) +
                                " does not match point count " + std::to_string(set.size()));
  }
  Point y(std::vector<double>(set.space().dim(), 0.0));
  for (std::size_t j = 0; j < set.size(); ++j) {
    const double wj = w[j];
    const Point& x = set[j];
    for (std::size_t k = 0; k < y.dim(); ++k) y[k] += wj * x[k];
  }
  return y;
}

Point barycenter(const PointSet& set) { return combine(set, SimplexWeights::uniform(set.size())); }

}  // namespace lpx
