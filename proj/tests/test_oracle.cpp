#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "lpx/chebyshev.hpp"
#include "lpx/numeric.hpp"
#include "lpx/oracle.hpp"
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

PointSet unit_square() {
  return PointSet(WeightedSpace(2.0, {1.0, 1.0}),
                  {Point{0.0, 0.0}, Point{1.0, 0.0}, Point{0.0, 1.0}, Point{1.0, 1.0}});
}

}  // namespace

TEST_CASE("grid radius on trivial sets") {
  PointSet one(WeightedSpace(2.0, {1.0}), {Point{3.0}});
  CHECK(oracle::grid_radius(one, 10) == 0.0);

  PointSet two(WeightedSpace(2.0, {1.0}), {Point{0.0}, Point{3.0}});
  CHECK(oracle::grid_radius(two, 10) == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("grid radius approaches the three unit vector value") {
  PointSet set(WeightedSpace(2.0, {1.0, 1.0, 1.0}),
               {Point{1.0, 0.0, 0.0}, Point{0.0, 1.0, 0.0}, Point{0.0, 0.0, 1.0}});
  const double exact = std::sqrt(6.0) / 3.0;
  const double g = oracle::grid_radius(set, 400);
  CHECK(g >= exact - 1e-12);  // the grid minimizes over a subset of the hull
  CHECK(g <= exact + 5e-3);
}

TEST_CASE("grid radius upper-bounds the solver on random sets") {
  std::mt19937_64 rng(77);
  for (int rep = 0; rep < 10; ++rep) {
    PointSet set = random_set(rng, 2 + rep % 3, 1 + rep % 3, (rep % 2) ? 1.5 : 3.0);
    SolverConfig cfg;
    cfg.tolerance = 1e-9;
    cfg.restarts = 1;
    ChebyshevSolution sol = relative_radius(set, cfg);
    const double g = oracle::grid_radius(set, 60);
    CHECK(sol.radius <= g + 1e-6);
    CHECK(g <= sol.radius + 0.05);
  }
}

TEST_CASE("grid radius guards its input") {
  std::mt19937_64 rng(78);
  PointSet six = random_set(rng, 6, 2, 2.0);
  CHECK_THROWS_AS(oracle::grid_radius(six, 10), std::invalid_argument);
  PointSet two = random_set(rng, 2, 2, 2.0);
  CHECK_THROWS_AS(oracle::grid_radius(two, 0), std::invalid_argument);
}

TEST_CASE("exhaustive m=1 recovers the diameter") {
  std::mt19937_64 rng(79);
  for (int rep = 0; rep < 5; ++rep) {
    PointSet set = random_set(rng, 7, 3, 2.5);
    oracle::BestSimplex bs = oracle::exhaustive_simplex(set, 1);
    CHECK(bs.best_min_edge == diameter(set));
    REQUIRE(bs.vertices.size() == 2);
    CHECK(distance(set.space(), set[bs.vertices[0]], set[bs.vertices[1]]) == bs.best_min_edge);
  }
}

TEST_CASE("exhaustive simplex on the unit square") {
  PointSet sq = unit_square();
  oracle::BestSimplex tri = oracle::exhaustive_simplex(sq, 2);
  CHECK(tri.best_min_edge == doctest::Approx(1.0).epsilon(1e-15));
  REQUIRE(tri.vertices.size() == 3);
  // several triples attain min edge 1; the lexicographically smallest wins
  CHECK(tri.vertices == std::vector<std::size_t>{0, 1, 2});

  oracle::BestSimplex quad = oracle::exhaustive_simplex(sq, 3);
  CHECK(quad.best_min_edge == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(quad.vertices == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("exhaustive simplex guards its input") {
  PointSet sq = unit_square();
  CHECK_THROWS_AS(oracle::exhaustive_simplex(sq, 0), std::invalid_argument);
  CHECK_THROWS_AS(oracle::exhaustive_simplex(sq, 5), std::invalid_argument);
  CHECK_THROWS_AS(oracle::exhaustive_simplex(sq, 4), std::invalid_argument);
  std::mt19937_64 rng(80);
  PointSet big = random_set(rng, 13, 2, 2.0);
  CHECK_THROWS_AS(oracle::exhaustive_simplex(big, 2), std::invalid_argument);
}

TEST_CASE("pairwise table") {
  PointSet sq = unit_square();
  auto t = oracle::pairwise_table(sq);
  REQUIRE(t.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    REQUIRE(t[i].size() == 4);
    CHECK(t[i][i] == 0.0);
    for (std::size_t j = 0; j < 4; ++j) CHECK(t[i][j] == t[j][i]);
  }
  CHECK(t[0][1] == 1.0);
  CHECK(t[0][3] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}
