#include <doctest.h>

#include <cmath>
#include <functional>
#include <tuple>

#include "polymin/refinement.hpp"

using namespace polymin;

namespace {

ResolvedBounds default_bounds(bool enabled = true) {
  ResolvedBounds rb;
  rb.enabled = enabled;
  rb.delta_bound = -1e-6;
  rb.slope_bound = -1e-6;
  return rb;
}

struct Harness {
  EvalContext ctx;
  Polygonal poly;
  Best best{};
  RefineOptions opt;

  Harness(std::function<double(double)> f, Domain dom, double ftol = 1e-6)
      : ctx(std::move(f), dom) {
    opt.xtol = 1e-6;
    opt.ftol = ftol;
    opt.bounds = default_bounds();
  }

  void seed(std::initializer_list<double> xs,
            const std::function<double(double)>& f) {
    const Polygonal::Evaluator counted = [this](double v) { return ctx(v); };
    for (double x : xs) {
      poly.insert(x, f(x), false, opt.xtol, counted);
    }
  }
};

} // namespace

TEST_CASE("initial_gate") {
  auto rb = default_bounds();
  SUBCASE("flat data is rejected when bounds are on") {
    CHECK_FALSE(initial_gate(0.0, 1.0, 1.0, 0.9999999, rb));
  }
  SUBCASE("a real drop proceeds") {
    CHECK(initial_gate(0.0, 1.0, 1.0, 0.5, rb));
  }
  SUBCASE("disabled bounds always proceed") {
    CHECK(initial_gate(0.0, 1.0, 1.0, 1.0, default_bounds(false)));
  }
}

TEST_CASE("candidate_gate") {
  auto rb = default_bounds();
  SUBCASE("deep valley passes") {
    CHECK(candidate_gate({0, 10}, {1, 0}, {2, 10}, rb, 0.0, 10.0, 1e-6));
  }
  SUBCASE("shallow high valley fails the band test") {
    CHECK_FALSE(candidate_gate({0, 9.2}, {1, 9.0}, {2, 9.1}, rb, 0.0, 10.0, 1e-6));
  }
  SUBCASE("refined center is skipped") {
    EvalPoint center{1, 0, true};
    CHECK_FALSE(candidate_gate({0, 10}, center, {2, 10}, rb, 0.0, 10.0, 1e-6));
  }
  SUBCASE("disabled bounds require only significant variation") {
    auto off = default_bounds(false);
    CHECK(candidate_gate({0, 10}, {1, 0}, {2, 10}, off, 0.0, 10.0, 1e-6));
    CHECK_FALSE(candidate_gate({0, 1.0}, {1, 1.0}, {2, 1.0}, off, 1.0, 1.0, 1e-6));
  }
}

TEST_CASE("refine_valley finds the exact vertex of a quadratic in one step") {
  auto f = [](double x) { return (x - 2.0) * (x - 2.0); };
  Harness h(f, {0.0, 10.0}, /*ftol=*/1.2); // loose ftol: converge after one hit
  h.seed({0.0, 1.0, 3.0}, f);
  h.best = {1.0, 1.0};
  const int changes =
      refine_valley(h.poly[0], h.poly[1], h.poly[2], h.poly, h.opt, h.ctx, h.best);
  CHECK(changes == 1);
  CHECK(h.ctx.nff() == 1);
  CHECK(h.best.x == doctest::Approx(2.0));
  CHECK(h.best.y == doctest::Approx(0.0));
}

TEST_CASE("refine_valley keeps proposals inside the bracket") {
  auto f = [](double x) { return std::sin(3.0 * x) + 0.1 * x; };
  Harness h(f, {0.0, 10.0});
  h.seed({1.0, 1.6, 2.4}, f);
  REQUIRE(h.poly[1].y < h.poly[0].y);
  REQUIRE(h.poly[1].y < h.poly[2].y);
  h.best = {1.6, h.poly[1].y};
  refine_valley(h.poly[0], h.poly[1], h.poly[2], h.poly, h.opt, h.ctx, h.best);
  for (const auto& p : h.poly.points()) {
    CHECK(p.x >= 1.0);
    CHECK(p.x <= 2.4);
  }
}

TEST_CASE("failure budget stops a flat adversarial valley") {
  // piecewise-flat bottom: every new evaluation returns the same value
  auto f = [](double x) {
    if (x > 0.5 && x < 2.5) return 1.0;
    return 10.0;
  };
  Harness h(f, {0.0, 10.0});
  h.seed({0.4, 1.5, 2.6}, f);
  h.best = {1.5, 1.0};
  refine_valley(h.poly[0], h.poly[1], h.poly[2], h.poly, h.opt, h.ctx, h.best);
  // four consecutive non-improving evaluations exhaust the budget
  CHECK(h.ctx.nff() <= h.opt.bounds.n_max_failed + 1);
}

TEST_CASE("ylocmin sequence is non-increasing and the center ends refined") {
  auto f = [](double x) { return (x - 2.0) * (x - 2.0) + 0.05 * std::sin(9 * x); };
  Harness h(f, {0.0, 10.0});
  h.seed({0.5, 1.7, 3.1}, f);
  h.best = {1.7, h.poly[1].y};
  refine_valley(h.poly[0], h.poly[1], h.poly[2], h.poly, h.opt, h.ctx, h.best);
  // the final best never exceeds the seed minimum
  CHECK(h.best.y <= f(1.7));
  bool any_refined = false;
  for (const auto& p : h.poly.points()) {
    any_refined = any_refined || p.refined;
  }
  CHECK(any_refined);
}

TEST_CASE("refine_all terminates once the polygonal stops changing") {
  auto f = [](double x) { return (x - 2.0) * (x - 2.0); };
  Harness h(f, {0.0, 10.0});
  h.seed({0.0, 1.0, 3.0, 5.0}, f);
  h.best = {1.0, 1.0};
  auto minima = refine_all(h.poly, h.opt, h.ctx, h.best);
  CHECK(h.best.x == doctest::Approx(2.0).epsilon(1e-6));
  REQUIRE(!minima.empty());
  bool found = false;
  for (const auto& m : minima) {
    if (m.refined && std::fabs(m.x - 2.0) < 1e-5) found = true;
  }
  CHECK(found);
  // the returned global best equals the least polygonal ordinate
  CHECK(h.best.y == h.poly.ordinate_range().first);
}

TEST_CASE("bounds gating skips shallow valleys and saves evaluations") {
  // one deep needle among shallow ripples
  auto f = [](double x) {
    const double u = (x - 2.5) / 0.3;
    return 0.1 * std::cos(2.0 * 3.14159265358979 * x) - 2.0 * std::exp(-u * u);
  };
  auto run = [&](bool bounds_on) {
    Harness h(f, {0.0, 5.0});
    h.opt.bounds = default_bounds(bounds_on);
    h.seed({0.5, 1.5, 2.2, 2.55, 3.0, 3.5, 4.5}, f);
    h.best = {2.55, f(2.55)};
    auto minima = refine_all(h.poly, h.opt, h.ctx, h.best);
    return std::tuple{h.ctx.nff(), h.best, minima};
  };
  auto [n_on, best_on, minima_on] = run(true);
  auto [n_off, best_off, minima_off] = run(false);
  CHECK(n_on < n_off);
  CHECK(best_on.x == doctest::Approx(best_off.x).epsilon(1e-5));
  // the gated run leaves some valleys unrefined
  bool any_unrefined = false;
  for (const auto& m : minima_on) {
    any_unrefined = any_unrefined || !m.refined;
  }
  CHECK(any_unrefined);
}
