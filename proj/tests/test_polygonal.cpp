#include <doctest.h>

#include <algorithm>
#include <random>

#include "polymin/polygonal.hpp"

using namespace polymin;

namespace {

Polygonal::Evaluator never_called() {
  return [](double) -> double {
    FAIL("objective must not be evaluated here");
    return 0.0;
  };
}

Polygonal make_poly(std::initializer_list<std::pair<double, double>> pts) {
  Polygonal poly;
  for (auto [x, y] : pts) {
    poly.insert(x, y, false, 1e-6, never_called());
  }
  return poly;
}

} // namespace

TEST_CASE("almost_equal_rel basic cases") {
  CHECK(almost_equal_rel(1.0, 1.0000005, 1e-6));
  CHECK(almost_equal_rel(0.0, 1e-7, 1e-6));
  CHECK_FALSE(almost_equal_rel(100.0, 101.0, 1e-6));
}

TEST_CASE("almost_equal_rel is asymmetric by construction") {
  // scaled by |a| only: (a, b) and (b, a) can disagree
  const double a = 0.0, b = 1.5e-6;
  CHECK_FALSE(almost_equal_rel(a, b, 1e-6));   // 1.5e-6 >= 1e-6 * 1
  CHECK(almost_equal_rel(b, a, 1e-6) ==
        (1.5e-6 < 1e-6 * (1 + 1.5e-6))); // still false, but via the b scale
}

TEST_CASE("insert into empty polygonal") {
  Polygonal poly;
  auto out = poly.insert(0.5, 2.0, false, 1e-6, never_called());
  CHECK(out.status == InsertStatus::Added);
  CHECK(poly.size() == 1);
  CHECK(poly[0].x == 0.5);
  CHECK(poly[0].y == 2.0);
}

TEST_CASE("near-duplicate insert does not evaluate") {
  Polygonal poly = make_poly({{0.5, 1.0}});
  auto out = poly.insert(0.5 + 1e-9, std::nullopt, false, 1e-6, never_called());
  CHECK(out.status == InsertStatus::Duplicate);
  CHECK(out.index == 0);
  CHECK(poly.size() == 1);
}

TEST_CASE("sorted insertion in the middle") {
  Polygonal poly = make_poly({{0.1, 1.0}, {0.5, 2.0}});
  auto out = poly.insert(0.3, 3.0, false, 1e-6, never_called());
  CHECK(out.status == InsertStatus::Added);
  CHECK(out.index == 1);
  REQUIRE(poly.size() == 3);
  CHECK(poly[0].x == 0.1);
  CHECK(poly[1].x == 0.3);
  CHECK(poly[2].x == 0.5);
}

TEST_CASE("lazy ordinate is evaluated exactly once") {
  Polygonal poly;
  int calls = 0;
  auto eval = [&](double x) {
    ++calls;
    return x * x;
  };
  auto out = poly.insert(3.0, std::nullopt, false, 1e-6, eval);
  CHECK(out.status == InsertStatus::Added);
  CHECK(calls == 1);
  CHECK(poly[0].y == 9.0);
}

TEST_CASE("ordinate_range") {
  CHECK(make_poly({{0, 4}, {1, 1}, {3, 9}}).ordinate_range() ==
        std::pair{1.0, 9.0});
  CHECK(make_poly({{2, 5}}).ordinate_range() == std::pair{5.0, 5.0});
  CHECK(make_poly({{0, -2}, {1, -2}}).ordinate_range() == std::pair{-2.0, -2.0});
}

TEST_CASE("valley scanning") {
  SUBCASE("single valley") {
    auto centers = make_poly({{0, 4}, {1, 1}, {3, 9}}).valley_centers();
    REQUIRE(centers.size() == 1);
    CHECK(centers[0] == 1);
  }
  SUBCASE("monotone gives none") {
    CHECK(make_poly({{0, 3}, {1, 2}, {2, 1}}).valley_centers().empty());
  }
  SUBCASE("two valleys") {
    auto centers =
        make_poly({{0, 2}, {1, 0}, {2, 1}, {3, 0.5}, {4, 2}}).valley_centers();
    REQUIRE(centers.size() == 2);
    CHECK(centers[0] == 1);
    CHECK(centers[1] == 3);
  }
  SUBCASE("flat tie counts as a valley") {
    auto centers = make_poly({{0, 2}, {1, 1}, {2, 1}, {3, 2}}).valley_centers();
    CHECK(centers.size() == 2);
  }
}

TEST_CASE("random insertions keep order and dedup invariants") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> xs(0.0, 1.0);
  const double xtol = 1e-3;
  Polygonal poly;
  int evals = 0;
  int added = 0;
  auto eval = [&](double x) {
    ++evals;
    return std::sin(x);
  };
  for (int i = 0; i < 500; ++i) {
    auto out = poly.insert(xs(rng), std::nullopt, false, xtol, eval);
    if (out.status == InsertStatus::Added) ++added;
  }
  // evaluation count equals the number of Added outcomes with absent ordinate
  CHECK(evals == added);
  CHECK(poly.size() == static_cast<std::size_t>(added));
  for (std::size_t i = 1; i < poly.size(); ++i) {
    CHECK(poly[i - 1].x < poly[i].x);
    CHECK_FALSE(almost_equal_rel(poly[i].x, poly[i - 1].x, xtol));
    CHECK_FALSE(almost_equal_rel(poly[i - 1].x, poly[i].x, xtol));
  }
}

TEST_CASE("valley scan equals brute-force enumeration") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ys(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    Polygonal poly;
    for (int i = 0; i < 12; ++i) {
      poly.insert(i, ys(rng), false, 1e-9, never_called());
    }
    std::vector<std::size_t> expected;
    for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
      const double dp = poly[i].y - poly[i - 1].y;
      const double dq = poly[i + 1].y - poly[i].y;
      if (dp * dq <= 0.0 &&
          poly[i].y <= std::max(poly[i - 1].y, poly[i + 1].y)) {
        expected.push_back(i);
      }
    }
    CHECK(poly.valley_centers() == expected);
  }
}
