#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "lpx/chebyshev.hpp"
#include "lpx/numeric.hpp"
#include "lpx/space.hpp"

using namespace lpx;

namespace {

PointSet random_set(std::mt19937_64& rng, int n, int cells, double p) {
  std::vector<double> mu(cells);
  for (double& m : mu) m = detail::uniform_in(rng, 0.2, 1.5);
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) {
    std::vector<double> c(cells);
    for (double& x : c) x = detail::uniform_in(rng, -2.0, 2.0);
    pts.emplace_back(std::move(c));
  }
  return PointSet(WeightedSpace(p, std::move(mu)), std::move(pts));
}

double max_distance_to(const PointSet& set, const Point& c) {
  double best = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    best = std::max(best, distance(set.space(), set[i], c));
  }
  return best;
}

PointSet three_unit_vectors() {
  return PointSet(WeightedSpace(2.0, {1.0, 1.0, 1.0}),
                  {Point{1.0, 0.0, 0.0}, Point{0.0, 1.0, 0.0}, Point{0.0, 0.0, 1.0}});
}

}  // namespace

TEST_CASE("simplex projection") {
  std::vector<double> a = project_to_simplex({1.2, -0.3});
  CHECK(a[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(a[1] == 0.0);

  std::vector<double> b = project_to_simplex({5.0});
  CHECK(b[0] == 1.0);

  std::vector<double> fixed = project_to_simplex({0.4, 0.4, 0.2});
  CHECK(fixed[0] == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(fixed[2] == doctest::Approx(0.2).epsilon(1e-15));

  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<double> v(1 + rep % 7);
    for (double& x : v) x = detail::uniform_in(rng, -3.0, 3.0);
    std::vector<double> pr = project_to_simplex(v);
    double sum = 0.0;
    for (double x : pr) {
      CHECK(x >= 0.0);
      sum += x;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    std::vector<double> again = project_to_simplex(pr);
    for (std::size_t k = 0; k < pr.size(); ++k)
      CHECK(std::fabs(again[k] - pr[k]) <= 1e-12);
  }
}

TEST_CASE("singleton and two-point sets are solved exactly") {
  PointSet one(WeightedSpace(2.0, {1.0}), {Point{7.0}});
  ChebyshevSolution s1 = relative_radius(one);
  CHECK(s1.radius == 0.0);
  CHECK(s1.converged);

  PointSet two(WeightedSpace(3.0, {1.0, 1.0}), {Point{0.0, 0.0}, Point{1.0, 2.0}});
  const double d = distance(two.space(), two[0], two[1]);
  ChebyshevSolution s2 = relative_radius(two);
  CHECK(std::fabs(s2.radius - d / 2.0) <= 1e-12);
  CHECK(std::fabs(s2.center[0] - 0.5) <= 1e-9);
  CHECK(std::fabs(s2.center[1] - 1.0) <= 1e-9);
  CHECK(s2.converged);
  CHECK(s2.gap_estimate <= SolverConfig{}.tolerance);
  REQUIRE(s2.weights.has_value());
  CHECK(std::fabs((*s2.weights)[0] - 0.5) <= 1e-9);
}

TEST_CASE("three unit vectors") {
  ChebyshevSolution sol = relative_radius(three_unit_vectors());
  CHECK(std::fabs(sol.radius - std::sqrt(6.0) / 3.0) <= 1e-12);
  REQUIRE(sol.weights.has_value());
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::fabs((*sol.weights)[i] - 1.0 / 3.0) <= 1e-9);
    CHECK(std::fabs(sol.center[i] - 1.0 / 3.0) <= 1e-9);
  }
}

TEST_CASE("radius sandwich on random sets") {
  std::mt19937_64 rng(6);
  const double ps[5] = {1.2, 1.5, 2.0, 3.0, 5.0};
  for (int rep = 0; rep < 60; ++rep) {
    const double p = ps[rep % 5];
    PointSet set = random_set(rng, 2 + rep % 4, 1 + rep % 4, p);
    SolverConfig cfg;
    cfg.restarts = 1;
    cfg.seed = 1000 + static_cast<std::uint64_t>(rep);
    ChebyshevSolution sol = relative_radius(set, cfg);
    const double d = diameter(set);
    const double jung = std::pow(2.0, -1.0 / alpha_exponent(p));
    CHECK(sol.radius >= d / 2.0 - 1e-12);
    CHECK(sol.radius <= jung * d + 1e-4);
    // the reported radius is the real covering radius of the reported center
    CHECK(std::fabs(sol.radius - max_distance_to(set, sol.center)) <=
          4e-15 * (1.0 + sol.radius));
    if (sol.converged) CHECK(sol.gap_estimate >= 0.0);
  }
}

TEST_CASE("relabeling cells or points leaves the radius alone") {
  std::mt19937_64 rng(7);
  SolverConfig cfg;
  cfg.tolerance = 1e-10;
  for (int rep = 0; rep < 6; ++rep) {
    PointSet set = random_set(rng, 4, 5, 2.0);
    ChebyshevSolution base = relative_radius(set, cfg);

    std::vector<std::size_t> perm = {3, 0, 4, 2, 1};
    std::vector<double> mu(5);
    for (std::size_t k = 0; k < 5; ++k) mu[k] = set.space().cells()[perm[k]];
    std::vector<Point> pts;
    for (std::size_t i = 0; i < set.size(); ++i) {
      std::vector<double> c(5);
      for (std::size_t k = 0; k < 5; ++k) c[k] = set[i][perm[k]];
      pts.emplace_back(std::move(c));
    }
    PointSet cells_permuted(WeightedSpace(2.0, std::move(mu)), std::move(pts));
    ChebyshevSolution cp = relative_radius(cells_permuted, cfg);
    CHECK(std::fabs(cp.radius - base.radius) <= 1e-9);

    PointSet points_permuted(set.space(), {set[2], set[0], set[3], set[1]});
    ChebyshevSolution pp = relative_radius(points_permuted, cfg);
    CHECK(std::fabs(pp.radius - base.radius) <= 1e-9);
  }
}

TEST_CASE("ambient radius never exceeds the relative radius") {
  std::mt19937_64 rng(8);
  const double ps[5] = {1.2, 1.5, 2.0, 3.0, 5.0};
  for (int rep = 0; rep < 15; ++rep) {
    PointSet set = random_set(rng, 2 + rep % 4, 1 + rep % 3, ps[rep % 5]);
    ChebyshevSolution amb = ambient_radius(set);
    ChebyshevSolution rel = relative_radius(set);
    CHECK(amb.radius <= rel.radius + 1e-8);
    CHECK_FALSE(amb.weights.has_value());
    CHECK(std::fabs(amb.radius - max_distance_to(set, amb.center)) <=
          4e-15 * (1.0 + amb.radius));
  }
}

TEST_CASE("ambient examples") {
  PointSet two(WeightedSpace(2.0, {1.0}), {Point{0.0}, Point{3.0}});
  ChebyshevSolution s = ambient_radius(two);
  CHECK(std::fabs(s.radius - 1.5) <= 1e-9);
  CHECK(std::fabs(s.center[0] - 1.5) <= 1e-6);

  // for p = 2 the centroid is already the free-space center, so the hull
  // constraint costs nothing here
  ChebyshevSolution tri = ambient_radius(three_unit_vectors());
  CHECK(std::fabs(tri.radius - std::sqrt(6.0) / 3.0) <= 1e-12);
}

TEST_CASE("hull and target lists may differ") {
  WeightedSpace s(2.0, {1.0});
  PointSet hull_pt(s, {Point{0.0}});
  PointSet target(s, {Point{2.0}});
  ChebyshevSolution pinned = radius_over_hull(target, hull_pt);
  CHECK(pinned.radius == 2.0);
  CHECK(pinned.center[0] == 0.0);
  CHECK(pinned.converged);

  PointSet seg(s, {Point{0.0}, Point{4.0}});
  PointSet inner(s, {Point{1.0}});
  ChebyshevSolution hit = radius_over_hull(inner, seg);
  CHECK(hit.radius <= 1e-5);
  CHECK(hit.converged);

  PointSet other(WeightedSpace(3.0, {1.0}), {Point{0.0}});
  CHECK_THROWS_AS(radius_over_hull(target, other), std::invalid_argument);
}

TEST_CASE("iteration starvation is reported") {
  std::mt19937_64 rng(9);
  PointSet set = random_set(rng, 4, 3, 2.0);
  SolverConfig cfg;
  cfg.max_iters = 15;
  ChebyshevSolution sol = relative_radius(set, cfg);
  CHECK_FALSE(sol.converged);
  CHECK(sol.gap_estimate > 0.0);
  CHECK(sol.radius >= diameter(set) / 2.0 - 1e-12);  // still a genuine covering radius
}

TEST_CASE("equidistant core drops interior points") {
  PointSet set(WeightedSpace(2.0, {1.0, 1.0}),
               {Point{1.0, 0.0}, Point{-1.0, 0.0}, Point{0.0, 0.0}});
  EquidistantCore core = equidistant_core(set);
  CHECK(core.indices == std::vector<std::size_t>{0, 1});
  CHECK(core.rounds == 2);
  CHECK_FALSE(core.cycled);
  CHECK(std::fabs(core.solution.radius - 1.0) <= 1e-9);

  PointSet one(WeightedSpace(2.0, {1.0}), {Point{0.0}});
  CHECK_THROWS_AS(equidistant_core(one), std::invalid_argument);
}

TEST_CASE("equidistant core keeps every survivor near the sphere") {
  std::mt19937_64 rng(10);
  for (int rep = 0; rep < 10; ++rep) {
    PointSet set = random_set(rng, 3 + rep % 4, 2, (rep % 2) ? 2.0 : 3.0);
    SolverConfig cfg;
    cfg.tolerance = 1e-8;
    EquidistantCore core = equidistant_core(set, cfg);
    REQUIRE(!core.indices.empty());
    CHECK(std::is_sorted(core.indices.begin(), core.indices.end()));
    PointSet sub = set.subset(core.indices);
    for (std::size_t i = 0; i < sub.size(); ++i) {
      double d = distance(set.space(), sub[i], core.solution.center);
      if (!core.cycled) CHECK(d >= core.solution.radius - cfg.active_tol);
      CHECK(d <= core.solution.radius + 1e-12);
    }
  }
}
