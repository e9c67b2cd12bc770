#include "lpx/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lpx/numeric.hpp"

namespace lpx {

double jung_constant(double p) {
  if (!std::isfinite(p) || !(p >= 1.0)) {
    throw std::domain_error("jung_constant: p must lie in [1, inf), got " + std::to_string(p));
  }
  return std::max(std::pow(2.0, 1.0 / p - 1.0), std::pow(2.0, -1.0 / p));
}

ExtremalityReport extremality_ratio(const PointSet& set, const SolverConfig& cfg) {
  ExtremalityReport rep;
  rep.diameter = diameter(set);
  if (rep.diameter <= 0.0) {
    throw std::invalid_argument("extremality_ratio: zero diameter (all points coincide)");
  }
  rep.solution = relative_radius(set, cfg);
  rep.radius = rep.solution.radius;
  rep.jung = jung_constant(set.space().p());
  rep.ratio = rep.radius / rep.diameter;
  rep.margin = rep.jung - rep.ratio;
  rep.tol = cfg.class_tol;
  rep.cls = (std::fabs(rep.ratio - rep.jung) <= cfg.class_tol) ? Extremality::kSelfExtremalWithinTol
                                                               : Extremality::kSubextremal;
  return rep;
}

double gulevich_margin(const PointSet& set, const SolverConfig& cfg) {
  double d = diameter(set);
  double r = relative_radius(set, cfg).radius;
  return jung_constant(set.space().p()) * d - r;
}

HeavyIndexReport heavy_indices(const PointSet& set, const SimplexWeights& w, double r) {
  if (w.size() != set.size()) {
    throw std::invalid_argument("heavy_indices: weight count does not match point count");
  }
  if (!(r > 0.0) || r > 1.0 + 1e-12) {
    throw std::invalid_argument("heavy_indices: radius must lie in (0, 1], got " +
                                std::to_string(r));
  }

  const WeightedSpace& space = set.space();
  const std::size_t n = set.size();
  const double r_alpha = detail::pow_abs(r, space.alpha());

  HeavyIndexReport rep;
  rep.radius_used = r;
  rep.threshold = 2.0 * r_alpha * (1.0 - std::sqrt(std::max(0.0, 1.0 - r_alpha)));

  rep.mean_power_distance.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    detail::KahanSum sum;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      sum.add(w[i] * distance_alpha_pow(space, set[i], set[j]));
    }
    rep.mean_power_distance[j] = sum.value();
  }

  double heavy_mass = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (rep.mean_power_distance[j] >= rep.threshold) {
      rep.heavy.push_back(j);
      heavy_mass += w[j];
    }
  }
  rep.residual_weight = 1.0 - heavy_mass;
  return rep;
}

std::vector<std::size_t> neighbor_indices(const PointSet& set, std::size_t j, double delta_alpha) {
  if (j >= set.size()) {
    throw std::out_of_range("neighbor_indices: index " + std::to_string(j) + " out of range");
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (distance_alpha_pow(set.space(), set[i], set[j]) >= delta_alpha) out.push_back(i);
  }
  return out;
}

namespace {

// Depth-first search for the lexicographically smallest clique of size
// `want` in the alpha-power threshold graph.
bool clique_dfs(const std::vector<std::vector<bool>>& ok, std::size_t n, std::size_t want,
                std::vector<std::size_t>& chosen, std::size_t from) {
  if (chosen.size() == want) return true;
  for (std::size_t cand = from; cand < n; ++cand) {
    if (n - cand < want - chosen.size()) break;  // not enough indices left
    bool fits = true;
    for (std::size_t c : chosen) {
      if (!ok[c][cand]) {
        fits = false;
        break;
      }
    }
    if (!fits) continue;
    chosen.push_back(cand);
    if (clique_dfs(ok, n, want, chosen, cand + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<SimplexWitness> extract_simplex(const PointSet& set, int m, double epsilon) {
  if (m < 1) throw std::invalid_argument("extract_simplex: m must be >= 1");
  const double d = diameter(set);
  if (!(epsilon > 0.0) || !(epsilon < d)) {
    throw std::invalid_argument("extract_simplex: epsilon must lie in (0, diameter)");
  }
  const std::size_t n = set.size();
  const std::size_t want = static_cast<std::size_t>(m) + 1;
  if (want > n) return std::nullopt;

  const double tau_alpha = detail::pow_abs(d - epsilon, set.space().alpha());
  std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool far = distance_alpha_pow(set.space(), set[i], set[j]) >= tau_alpha;
      ok[i][j] = ok[j][i] = far;
    }
  }

  auto witness_from = [&](std::vector<std::size_t> vertices) {
    std::sort(vertices.begin(), vertices.end());
    SimplexWitness wit;
    wit.vertices = std::move(vertices);
    wit.m = m;
    wit.epsilon_used = epsilon;
    wit.min_edge = d;
    for (std::size_t a = 0; a < wit.vertices.size(); ++a) {
      for (std::size_t b = a + 1; b < wit.vertices.size(); ++b) {
        wit.min_edge =
            std::min(wit.min_edge, distance(set.space(), set[wit.vertices[a]], set[wit.vertices[b]]));
      }
    }
    return wit;
  };

  // Greedy pass: pick the lowest-index member of the running neighbor
  // intersection, restarting over start points.
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> chosen{s};
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < n; ++i) {
      if (ok[s][i]) candidates.push_back(i);
    }
    while (chosen.size() < want && !candidates.empty()) {
      std::size_t z = candidates.front();
      chosen.push_back(z);
      std::vector<std::size_t> next;
      for (std::size_t i : candidates) {
        if (i != z && ok[z][i]) next.push_back(i);
      }
      candidates = std::move(next);
    }
    if (chosen.size() == want) return witness_from(std::move(chosen));
  }

  // Complete pass: the greedy chain can dead-end even when a simplex exists,
  // so decide the leftovers exactly with a lexicographic clique search.
  std::vector<std::size_t> chosen;
  if (clique_dfs(ok, n, want, chosen, 0)) return witness_from(std::move(chosen));
  return std::nullopt;
}

std::vector<std::size_t> separated_subset(const PointSet& set, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("separated_subset: delta must be > 0");
  const double delta_alpha = detail::pow_abs(delta, set.space().alpha());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    bool far = true;
    for (std::size_t s : out) {
      if (distance_alpha_pow(set.space(), set[i], set[s]) < delta_alpha) {
        far = false;
        break;
      }
    }
    if (far) out.push_back(i);
  }
  return out;
}

}  // namespace lpx
