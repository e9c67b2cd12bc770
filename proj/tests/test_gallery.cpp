#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <string>

#include "doctest.h"
#include "lpx/chebyshev.hpp"
#include "lpx/extremal.hpp"
#include "lpx/gallery.hpp"
#include "lpx/space.hpp"

using namespace lpx;

TEST_CASE("indicator family layout") {
  PointSet fam = gallery::indicator_family(4, 3.0);
  REQUIRE(fam.size() == 4);
  REQUIRE(fam.space().dim() == 4);
  CHECK(fam.space().p() == 3.0);
  for (double m : fam.space().cells()) CHECK(m == 1.0);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(fam[i][k] == (i == k ? 1.0 : 0.0));
    }
  }
  const double want = std::pow(2.0, 1.0 / 3.0);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      CHECK(distance(fam.space(), fam[i], fam[j]) == want);
    }
  }
}

TEST_CASE("indicator family validation") {
  CHECK_THROWS_AS(gallery::indicator_family(1, 3.0), std::invalid_argument);
  CHECK_THROWS_AS(gallery::indicator_family(4, 1.5), std::invalid_argument);
  try {
    gallery::indicator_family(4, 1.5);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("p >= 2") != std::string::npos);
  }
  CHECK_NOTHROW(gallery::indicator_family(2, 2.0));
  CHECK_THROWS_AS(gallery::indicator_truncation_radius(1, 3.0), std::invalid_argument);
}

TEST_CASE("truncation radius closed form") {
  CHECK(std::fabs(gallery::indicator_truncation_radius(2, 2.0) - std::sqrt(0.5)) <= 1e-15);
  CHECK(std::fabs(gallery::indicator_truncation_radius(3, 2.0) - std::sqrt(6.0) / 3.0) <=
        1e-15);
  const double r10 = std::pow(std::pow(0.9, 3.0) + 9.0 / 1000.0, 1.0 / 3.0);
  CHECK(std::fabs(gallery::indicator_truncation_radius(10, 3.0) - r10) <= 1e-14);

  // the formula is the solver's answer, not just a formula
  for (int n : {2, 3, 5}) {
    for (double p : {2.0, 3.0, 5.0}) {
      PointSet fam = gallery::indicator_family(n, p);
      ChebyshevSolution sol = relative_radius(fam);
      CHECK(std::fabs(sol.radius - gallery::indicator_truncation_radius(n, p)) <= 1e-9);
    }
  }
}

TEST_CASE("sign generator family layout") {
  PointSet fam = gallery::rademacher_family(2, 1.5, 2);
  REQUIRE(fam.size() == 2);
  REQUIRE(fam.space().dim() == 4);
  for (double m : fam.space().cells()) CHECK(m == 0.25);
  const double r0[4] = {1.0, 1.0, -1.0, -1.0};
  const double r1[4] = {1.0, -1.0, 1.0, -1.0};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(fam[0][k] == r0[k]);
    CHECK(fam[1][k] == r1[k]);
  }
  CHECK(norm(fam.space(), fam[0]) == 1.0);
  CHECK(norm(fam.space(), fam[1]) == 1.0);
  const double want = std::pow(2.0, 1.0 - 1.0 / 1.5);
  CHECK(std::fabs(distance(fam.space(), fam[0], fam[1]) - want) <= 1e-15);
}

TEST_CASE("sign generators are orthonormal in the pairing") {
  PointSet fam = gallery::rademacher_family(4, 1.5, 4);
  REQUIRE(fam.space().dim() == 16);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < 16; ++k) {
        s += fam.space().cells()[k] * fam[i][k] * fam[j][k];
      }
      CHECK(s == (i == j ? 1.0 : 0.0));  // dyadic sums are exact
    }
  }
}

TEST_CASE("sign generator validation") {
  CHECK_THROWS_AS(gallery::rademacher_family(2, 2.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(gallery::rademacher_family(2, 1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(gallery::rademacher_family(0, 1.5, 4), std::invalid_argument);
  CHECK_THROWS_AS(gallery::rademacher_family(5, 1.5, 4), std::invalid_argument);
  CHECK_THROWS_AS(gallery::rademacher_family(2, 1.5, 21), std::invalid_argument);
  try {
    gallery::rademacher_family(5, 1.5, 4);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("not representable") != std::string::npos);
  }
}

TEST_CASE("withheld generator pairs to one against the hull gap") {
  PointSet fam = gallery::rademacher_family(4, 1.5, 4);
  PointSet hull = fam.subset({0, 1, 2});
  Point y = barycenter(hull);
  double s = 0.0;
  for (std::size_t k = 0; k < fam.space().dim(); ++k) {
    s += fam.space().cells()[k] * (fam[3][k] - y[k]) * fam[3][k];
  }
  CHECK(std::fabs(s - 1.0) <= 1e-13);
}

TEST_CASE("holdout radius matches the block average closed form") {
  // center = hull barycenter by symmetry; its block values follow the
  // binomial distribution over L signs, and the withheld generator splits
  // every block evenly, so
  //   radius^p = 2^-L sum_k C(L,k) (|b-1|^p + |b+1|^p)/2,  b = (L-2k)/L.
  auto closed_form = [](int L, double p) {
    double s = 0.0;
    double binom = 1.0;
    for (int k = 0; k <= L; ++k) {
      const double b = static_cast<double>(L - 2 * k) / static_cast<double>(L);
      s += binom * 0.5 *
           (std::pow(std::fabs(b - 1.0), p) + std::pow(std::fabs(b + 1.0), p));
      binom = binom * static_cast<double>(L - k) / static_cast<double>(k + 1);
    }
    return std::pow(s / std::pow(2.0, L), 1.0 / p);
  };

  gallery::HoldoutRadius h2 = gallery::rademacher_holdout(2, 1.5, 8);
  CHECK(h2.hull_count == 2);
  CHECK(h2.withheld == 2);
  const double v2 = std::pow((2.0 + std::pow(2.0, 1.5)) / 4.0, 2.0 / 3.0);
  CHECK(std::fabs(h2.solution.radius - v2) <= 1e-10);
  CHECK(std::fabs(closed_form(2, 1.5) - v2) <= 1e-14);

  gallery::HoldoutRadius h4 = gallery::rademacher_holdout(4, 1.5, 8);
  CHECK(h4.hull_count == 4);
  CHECK(std::fabs(h4.solution.radius - closed_form(4, 1.5)) <= 1e-9);

  // at n = K the deepest representable generator caps the hull
  gallery::HoldoutRadius h8 = gallery::rademacher_holdout(8, 1.5, 8);
  CHECK(h8.hull_count == 7);
  CHECK(h8.withheld == 7);
  CHECK(std::fabs(h8.solution.radius - closed_form(7, 1.5)) <= 1e-9);

  // the withheld generator integrates to zero against every allowed center,
  // which keeps the value pinned above 1 while it sinks toward it
  CHECK(h2.solution.radius >= 1.0);
  CHECK(h4.solution.radius >= 1.0);
  CHECK(h8.solution.radius >= 1.0);
  CHECK(h2.solution.radius > h4.solution.radius);
  CHECK(h4.solution.radius > h8.solution.radius);
}

TEST_CASE("holdout validation") {
  CHECK_THROWS_AS(gallery::rademacher_holdout(0, 1.5, 4), std::invalid_argument);
  CHECK_THROWS_AS(gallery::rademacher_holdout(2, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(gallery::rademacher_holdout(5, 1.5, 4), std::invalid_argument);
}

TEST_CASE("default depth") {
  CHECK(gallery::rademacher_default_depth(1) == 6);
  CHECK(gallery::rademacher_default_depth(6) == 6);
  CHECK(gallery::rademacher_default_depth(9) == 9);
}

TEST_CASE("random family is reproducible and in range") {
  PointSet a = gallery::random_family(7, 5, 3, 1.5);
  PointSet b = gallery::random_family(7, 5, 3, 1.5);
  REQUIRE(a.size() == 5);
  REQUIRE(a.space().dim() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(a.space().cells()[k] == b.space().cells()[k]);
    CHECK(a.space().cells()[k] >= 0.1);
    CHECK(a.space().cells()[k] <= 2.0);
  }
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(a[i][k] == b[i][k]);
      CHECK(a[i][k] >= -3.0);
      CHECK(a[i][k] <= 3.0);
    }
  }

  PointSet c = gallery::random_family(8, 5, 3, 1.5);
  bool differs = false;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t k = 0; k < 3; ++k) {
      if (a[i][k] != c[i][k]) differs = true;
    }
  }
  CHECK(differs);

  PointSet tight = gallery::random_family(3, 4, 2, 2.0, 0.5, 0.6);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < 2; ++k) {
      CHECK(tight[i][k] >= 0.5);
      CHECK(tight[i][k] <= 0.6);
    }
  }

  CHECK(diameter(gallery::random_family(1, 1, 3, 2.0)) == 0.0);
  CHECK(gulevich_margin(gallery::random_family(7, 5, 3, 1.5)) > 0.0);

  CHECK_THROWS_AS(gallery::random_family(1, 0, 3, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(gallery::random_family(1, 2, 0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(gallery::random_family(1, 2, 2, 2.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(gallery::random_family(1, 2, 2, 0.5), std::domain_error);
}
