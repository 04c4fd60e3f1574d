#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

#include "polymin/corpus.hpp"
#include "polymin/solver.hpp"

using namespace polymin;

namespace {

RunResult run(const std::function<double(double)>& f, Domain dom,
              std::vector<GivenPoint> given, SolverConfig cfg = {}) {
  cfg.domain = dom;
  return min_search_1d(f, given, cfg);
}

} // namespace

TEST_CASE("acquire_initial_points orders the pair by descending ordinate") {
  EvalContext ctx([](double x) { return x; }, {0.0, 10.0});
  std::mt19937_64 rng(1);
  std::vector<GivenPoint> given{{1.0, std::nullopt}, {4.0, std::nullopt}};
  auto pair = acquire_initial_points(ctx, ctx.domain(), given, rng, 16, 1e-6);
  REQUIRE(pair);
  CHECK(pair->fb < pair->fa);
  CHECK(pair->xb == 1.0);
  CHECK(pair->xa == 4.0);
  CHECK(ctx.nff() == 2);
}

TEST_CASE("acquire_initial_points completes a single given point") {
  EvalContext ctx([](double x) { return (x - 2.0) * (x - 2.0); }, {0.0, 10.0});
  std::mt19937_64 rng(3);
  std::vector<GivenPoint> given{{5.0, std::nullopt}};
  auto pair = acquire_initial_points(ctx, ctx.domain(), given, rng, 16, 1e-6);
  REQUIRE(pair);
  CHECK(pair->fb < pair->fa);
  CHECK(ctx.domain().contains(pair->xa));
  CHECK(ctx.domain().contains(pair->xb));
}

TEST_CASE("constant function is detected within the trial budget") {
  int evals = 0;
  auto f = [&](double) {
    ++evals;
    return 7.0;
  };
  auto r = run(f, {0.0, 10.0}, {{5.0, std::nullopt}});
  CHECK(r.termination == Termination::ConstantFunction);
  CHECK(r.ymin == 7.0);
  CHECK(evals <= 17); // one seed point plus at most max_initial_trials probes
  CHECK(r.n_evals == evals);
}

TEST_CASE("quadratic converges to the vertex in few evaluations") {
  int evals = 0;
  auto f = [&](double x) {
    ++evals;
    return (x - 2.0) * (x - 2.0);
  };
  auto r = run(f, {0.0, 10.0}, {{0.5, std::nullopt}, {1.0, std::nullopt}});
  CHECK(r.termination == Termination::Converged);
  CHECK(std::fabs(r.xmin - 2.0) <= 1e-6 * (1.0 + 2.0));
  CHECK(evals <= 12);
  CHECK(r.n_evals == evals);
}

TEST_CASE("monotone objective ends exactly at the boundary") {
  auto r = run([](double x) { return -x; }, {0.0, 10.0},
               {{0.0, std::nullopt}, {1.0, std::nullopt}});
  CHECK(r.termination == Termination::Converged);
  CHECK(r.xmin == 10.0);
  CHECK(r.ymin == -10.0);
}

TEST_CASE("multimodal objective matches the dense-grid reference") {
  auto f = [](double x) { return std::sin(x) + std::sin(10.0 * x / 3.0); };
  const Domain dom{2.7, 7.5};
  auto oracle = bench::dense_grid_oracle(f, dom, 200'000);
  auto r = run(f, dom, {{4.8, std::nullopt}, {5.0, std::nullopt}});
  CHECK(r.termination == Termination::Converged);
  CHECK(std::fabs(r.ymin - oracle.y) <= 1e-3 * (1.0 + std::fabs(oracle.y)));
}

TEST_CASE("runs are deterministic under a fixed seed") {
  auto f = [](double x) { return std::sin(x) + std::sin(10.0 * x / 3.0); };
  SolverConfig cfg;
  cfg.rng_seed = 99;
  auto a = run(f, {2.7, 7.5}, {{5.0, std::nullopt}}, cfg);
  auto b = run(f, {2.7, 7.5}, {{5.0, std::nullopt}}, cfg);
  CHECK(a.xmin == b.xmin);
  CHECK(a.ymin == b.ymin);
  CHECK(a.n_evals == b.n_evals);
  CHECK(a.trace.events().size() == b.trace.events().size());
}

TEST_CASE("reported n_evals equals the trace evaluation events") {
  auto f = [](double x) { return std::cos(3.0 * x) + 0.1 * x; };
  auto r = run(f, {0.0, 10.0}, {{1.0, std::nullopt}, {1.5, std::nullopt}});
  int n = 0;
  for (const auto& e : r.trace.events()) {
    if (e.kind == EventKind::Evaluation) ++n;
  }
  CHECK(n == r.n_evals);
}

TEST_CASE("evaluation budget yields a usable partial result") {
  auto f = [](double x) { return std::sin(x) + std::sin(10.0 * x / 3.0); };
  SolverConfig cfg;
  cfg.max_evals = 6;
  auto r = run(f, {2.7, 7.5}, {{3.0, std::nullopt}, {3.2, std::nullopt}}, cfg);
  CHECK(r.termination == Termination::BudgetExhausted);
  CHECK(r.n_evals <= 6);
  CHECK(std::isfinite(r.ymin));
  CHECK(Domain{2.7, 7.5}.contains(r.xmin));
}

TEST_CASE("non-finite objective value raises EvaluationError with context") {
  auto f = [](double x) {
    if (x > 3.0) return std::numeric_limits<double>::quiet_NaN();
    return (x - 5.0) * (x - 5.0);
  };
  std::vector<GivenPoint> given{{0.5, std::nullopt}, {1.0, std::nullopt}};
  SolverConfig cfg;
  cfg.domain = {0.0, 10.0};
  try {
    min_search_1d(f, given, cfg);
    FAIL("expected EvaluationError");
  } catch (const EvaluationError& e) {
    CHECK(e.where() > 3.0);
    CHECK(!e.partial_trace().events().empty());
  }
}

TEST_CASE("an insignificant start is gated out when bounds are on") {
  // nearly flat everywhere: the initial drop cannot clear the thresholds
  auto f = [](double x) { return 1.0 + 1e-12 * x; };
  auto r = run(f, {0.0, 10.0}, {{2.0, std::nullopt}, {7.0, std::nullopt}});
  CHECK((r.termination == Termination::GatedOut ||
         r.termination == Termination::ConstantFunction));
}

TEST_CASE("invalid configuration throws") {
  SolverConfig cfg;
  cfg.domain = {5.0, 5.0}; // empty domain
  std::vector<GivenPoint> given;
  CHECK_THROWS_AS(min_search_1d([](double x) { return x; }, given, cfg),
                  std::invalid_argument);
  SolverConfig cfg2;
  cfg2.domain = {0.0, 10.0};
  std::vector<GivenPoint> out{{42.0, std::nullopt}};
  CHECK_THROWS_AS(min_search_1d([](double x) { return x; }, out, cfg2),
                  std::invalid_argument);
}

TEST_CASE("all reported local minima lie inside the domain") {
  auto f = [](double x) { return std::sin(8.0 * x) + 0.05 * x * x; };
  auto r = run(f, {0.0, 10.0}, {{0.2, std::nullopt}, {0.4, std::nullopt}});
  REQUIRE(!r.local_minima.empty());
  for (const auto& m : r.local_minima) {
    CHECK(m.x >= 0.0);
    CHECK(m.x <= 10.0);
    CHECK(m.y >= r.ymin);
  }
}

TEST_CASE("trace round-trips through JSONL") {
  auto f = [](double x) { return (x - 2.0) * (x - 2.0); };
  auto r = run(f, {0.0, 10.0}, {{0.5, std::nullopt}, {1.0, std::nullopt}});
  std::stringstream buf;
  r.trace.to_jsonl(buf);
  Trace back = Trace::from_jsonl(buf);
  REQUIRE(back.events().size() == r.trace.events().size());
  for (std::size_t i = 0; i < back.events().size(); ++i) {
    CHECK(back.events()[i].kind == r.trace.events()[i].kind);
    CHECK(back.events()[i].seq == r.trace.events()[i].seq);
  }
  CHECK(back.snapshots().size() == r.trace.snapshots().size());
}
