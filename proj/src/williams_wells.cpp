#include "lpx/williams_wells.hpp"

#include <stdexcept>

#include "lpx/numeric.hpp"

namespace lpx::ww {

std::pair<double, double> ww_sides(const PointSet& set, const SimplexWeights& t) {
  if (t.size() != set.size()) {
    throw std::invalid_argument("ww_sides: weight count does not match point count");
  }
  const WeightedSpace& space = set.space();
  const std::size_t n = set.size();

  Point m = combine(set, t);

  detail::KahanSum lhs;
  for (std::size_t i = 0; i < n; ++i) {
    lhs.add(t[i] * distance_alpha_pow(space, set[i], m));
  }

  detail::KahanSum rhs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      rhs.add(2.0 * t[i] * t[j] * distance_alpha_pow(space, set[i], set[j]));
    }
  }
  return {2.0 * lhs.value(), rhs.value()};
}

double ww_gap(const PointSet& set, const SimplexWeights& t) {
  auto [lhs, rhs] = ww_sides(set, t);
  return rhs - lhs;
}

std::pair<PointSet, SimplexWeights> drop_zero_weights(const PointSet& set,
                                                      const SimplexWeights& t,
                                                      double eps) {
  if (t.size() != set.size()) {
    throw std::invalid_argument("drop_zero_weights: weight count does not match point count");
  }
  std::vector<std::size_t> keep;
  double mass = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] >= eps) {
      keep.push_back(i);
      mass += t[i];
    }
  }
  if (keep.empty()) {
    throw std::invalid_argument("drop_zero_weights: all weights below threshold");
  }
  std::vector<double> w;
  w.reserve(keep.size());
  for (std::size_t i : keep) w.push_back(t[i] / mass);
  return {set.subset(keep), SimplexWeights(std::move(w))};
}

}  // namespace lpx::ww
