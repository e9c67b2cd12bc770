#include "lpx/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace lpx::oracle {

namespace {

double compositions_estimate(int resolution, std::size_t parts) {
  // C(resolution + parts - 1, parts - 1)
  double c = 1.0;
  for (std::size_t i = 1; i < parts; ++i) {
    c *= static_cast<double>(resolution + i) / static_cast<double>(i);
  }
  return c;
}

// Advance idx to the next k-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

double grid_radius(const PointSet& set, int resolution) {
  const std::size_t n = set.size();
  if (n > 5) {
    throw std::invalid_argument("grid_radius: instance too large (" + std::to_string(n) +
                                " points, max 5)");
  }
  if (resolution < 1) throw std::invalid_argument("grid_radius: resolution must be >= 1");
  if (compositions_estimate(resolution, n) > 3e8) {
    throw std::invalid_argument("grid_radius: instance too large (grid would exceed 3e8 cells)");
  }

  const WeightedSpace& space = set.space();
  const std::size_t dim = space.dim();
  const double inv_r = 1.0 / static_cast<double>(resolution);

  double best = std::numeric_limits<double>::infinity();
  // y accumulates sum_{j<depth} (k_j/resolution) x_j per recursion level.
  std::vector<std::vector<double>> partial(n + 1, std::vector<double>(dim, 0.0));
  Point y(std::vector<double>(dim, 0.0));

  auto evaluate = [&](const std::vector<double>& center) {
    y.coeffs = center;
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(worst, distance(space, set[i], y));
    }
    best = std::min(best, worst);
  };

  auto recurse = [&](auto&& self, std::size_t j, int left) -> void {
    if (j == n - 1) {
      std::vector<double>& acc = partial[j + 1];
      acc = partial[j];
      const double w = left * inv_r;
      for (std::size_t k = 0; k < dim; ++k) acc[k] += w * set[j][k];
      evaluate(acc);
      return;
    }
    for (int kj = 0; kj <= left; ++kj) {
      std::vector<double>& acc = partial[j + 1];
      acc = partial[j];
      const double w = kj * inv_r;
      for (std::size_t k = 0; k < dim; ++k) acc[k] += w * set[j][k];
      self(self, j + 1, left - kj);
    }
  };

  if (n == 1) return 0.0;
  recurse(recurse, 0, resolution);
  return best;
}

BestSimplex exhaustive_simplex(const PointSet& set, int m) {
  const std::size_t n = set.size();
  if (n > 12) {
    throw std::invalid_argument("exhaustive_simplex: instance too large (" + std::to_string(n) +
                                " points, max 12)");
  }
  if (m < 1 || m > 4) throw std::invalid_argument("exhaustive_simplex: m must lie in [1, 4]");
  const std::size_t want = static_cast<std::size_t>(m) + 1;
  if (want > n) {
    throw std::invalid_argument("exhaustive_simplex: need m+1 <= point count");
  }

  std::vector<std::vector<double>> dist = pairwise_table(set);

  BestSimplex best;
  best.best_min_edge = -1.0;
  std::vector<std::size_t> idx(want);
  for (std::size_t i = 0; i < want; ++i) idx[i] = i;

  auto min_edge = [&](const std::vector<std::size_t>& v) {
    double e = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < v.size(); ++a) {
      for (std::size_t b = a + 1; b < v.size(); ++b) {
        e = std::min(e, dist[v[a]][v[b]]);
      }
    }
    return e;
  };

  // Lexicographic subset enumeration; strict '>' keeps the first (smallest)
  // attaining subset.
  while (true) {
    double e = min_edge(idx);
    if (e > best.best_min_edge) {
      best.best_min_edge = e;
      best.vertices = idx;
    }
    if (!next_combination(idx, n)) break;
  }
  return best;
}

std::vector<std::vector<double>> pairwise_table(const PointSet& set) {
  const std::size_t n = set.size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i][j] = d[j][i] = distance(set.space(), set[i], set[j]);
    }
  }
  return d;
}

}  // namespace lpx::oracle
