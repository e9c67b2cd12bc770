#include "lpx/gallery.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "lpx/numeric.hpp"

namespace lpx::gallery {

PointSet indicator_family(int n, double p) {
  if (n < 2) throw std::invalid_argument("indicator_family: need n >= 2");
  if (!(p >= 2.0)) {
    throw std::invalid_argument(
        "indicator_family: requires p >= 2 (below that the family is not extremal and its "
        "metric facts fail)");
  }
  std::vector<double> cells(static_cast<std::size_t>(n), 1.0);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<double> coeffs(static_cast<std::size_t>(n), 0.0);
    coeffs[static_cast<std::size_t>(i)] = 1.0;
    pts.emplace_back(std::move(coeffs));
  }
  return PointSet(WeightedSpace(p, std::move(cells)), std::move(pts));
}

double indicator_truncation_radius(int n, double p) {
  if (n < 2) throw std::invalid_argument("indicator_truncation_radius: need n >= 2");
  const double nn = static_cast<double>(n);
  double sum = detail::pow_abs(1.0 - 1.0 / nn, p) + (nn - 1.0) * detail::pow_abs(1.0 / nn, p);
  return std::pow(sum, 1.0 / p);
}

PointSet rademacher_family(int n, double p, int K) {
  if (n < 1) throw std::invalid_argument("rademacher_family: need n >= 1");
  if (!(p > 1.0) || !(p < 2.0)) {
    throw std::invalid_argument("rademacher_family: requires 1 < p < 2");
  }
  if (K < n) {
    throw std::invalid_argument("rademacher_family: need K >= n, generator " +
                                std::to_string(n - 1) + " is not representable at depth " +
                                std::to_string(K));
  }
  if (K > 20) throw std::invalid_argument("rademacher_family: depth K > 20 is unreasonable");

  const std::size_t ncells = std::size_t{1} << K;
  std::vector<double> cells(ncells, std::ldexp(1.0, -K));
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<double> coeffs(ncells);
    const int shift = K - i - 1;  // block length 2^shift
    for (std::size_t c = 0; c < ncells; ++c) {
      coeffs[c] = ((c >> shift) & 1U) == 0 ? 1.0 : -1.0;
    }
    pts.emplace_back(std::move(coeffs));
  }
  return PointSet(WeightedSpace(p, std::move(cells)), std::move(pts));
}

int rademacher_default_depth(int n) { return std::max(n, 6); }

HoldoutRadius rademacher_holdout(int n, double p, int K, const SolverConfig& cfg) {
  if (n < 1) throw std::invalid_argument("rademacher_holdout: need n >= 1");
  if (K < 2 || K < n) throw std::invalid_argument("rademacher_holdout: need K >= max(n, 2)");
  const int L = std::min(n, K - 1);

  PointSet targets = rademacher_family(L + 1, p, K);
  std::vector<std::size_t> hull_idx(static_cast<std::size_t>(L));
  for (int i = 0; i < L; ++i) hull_idx[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
  PointSet hull = targets.subset(hull_idx);

  HoldoutRadius out;
  out.solution = radius_over_hull(targets, hull, cfg);
  out.hull_count = L;
  out.withheld = L;
  return out;
}

PointSet random_family(std::uint64_t seed, int n, int cells, double p, double lo, double hi) {
  if (n < 1 || cells < 1) throw std::invalid_argument("random_family: need n >= 1, cells >= 1");
  if (!(lo < hi)) throw std::invalid_argument("random_family: need lo < hi");
  std::mt19937_64 rng(seed);
  std::vector<double> mu(static_cast<std::size_t>(cells));
  for (double& m : mu) m = detail::uniform_in(rng, 0.1, 2.0);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<double> coeffs(static_cast<std::size_t>(cells));
    for (double& c : coeffs) c = detail::uniform_in(rng, lo, hi);
    pts.emplace_back(std::move(coeffs));
  }
  return PointSet(WeightedSpace(p, std::move(mu)), std::move(pts));
}

}  // namespace lpx::gallery
