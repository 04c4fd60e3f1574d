#include "polymin/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "polymin/bracketing.hpp"
#include "polymin/constants.hpp"
#include "polymin/interpolation.hpp"

namespace polymin {

const char* to_string(Termination t) {
  switch (t) {
    case Termination::Converged: return "converged";
    case Termination::BudgetExhausted: return "budget_exhausted";
    case Termination::GatedOut: return "gated_out";
    case Termination::ConstantFunction: return "constant_function";
  }
  return "unknown";
}

namespace {

double random_step(std::mt19937_64& rng, double ref, const Domain& dom,
                   double xtol) {
  const double half = kCGold * dom.width();
  std::uniform_real_distribution<double> dist(-half, half);
  double x = ref;
  for (int attempt = 0; attempt < 16; ++attempt) {
    x = std::clamp(ref + dist(rng), dom.xinf, dom.xsup);
    if (!almost_equal_rel(x, ref, xtol)) {
      break;
    }
  }
  return x;
}

// Finds a companion point for (xa, fa) with a distinct ordinate, taking
// seeded random steps. Steps continue from the most recent sample.
std::optional<InitialPair> complete_pair(EvalContext& ctx, const Domain& dom,
                                         double xa, double fa,
                                         std::mt19937_64& rng, int max_trials,
                                         double xtol) {
  double ref = xa;
  for (int trial = 0; trial < max_trials; ++trial) {
    const double xb = random_step(rng, ref, dom, xtol);
    if (almost_equal_rel(xb, xa, xtol)) {
      ref = xb;
      continue; // too close to the anchor to be a distinct sample
    }
    const double fb = ctx(xb);
    if (fb != fa) {
      if (fb < fa) {
        return InitialPair{xa, fa, xb, fb};
      }
      return InitialPair{xb, fb, xa, fa};
    }
    ref = xb;
  }
  return std::nullopt;
}

} // namespace

std::optional<InitialPair> acquire_initial_points(EvalContext& ctx,
                                                  const Domain& dom,
                                                  std::span<const GivenPoint> given,
                                                  std::mt19937_64& rng,
                                                  int max_trials, double xtol) {
  if (given.size() > 2) {
    throw std::invalid_argument("at most two starting points may be given");
  }
  for (const auto& g : given) {
    if (!dom.contains(g.x)) {
      throw std::invalid_argument("given starting point outside the domain");
    }
  }
  auto value_of = [&](const GivenPoint& g) { return g.y ? *g.y : ctx(g.x); };

  if (given.size() == 2) {
    double xa = given[0].x, fa = value_of(given[0]);
    double xb = given[1].x, fb = value_of(given[1]);
    if (fb > fa) {
      std::swap(xa, xb);
      std::swap(fa, fb);
    }
    if (fa != fb) {
      return InitialPair{xa, fa, xb, fb};
    }
    return complete_pair(ctx, dom, xb, fb, rng, max_trials, xtol);
  }

  double xa, fa;
  if (given.size() == 1) {
    xa = given[0].x;
    fa = value_of(given[0]);
  } else {
    std::uniform_real_distribution<double> dist(dom.xinf, dom.xsup);
    xa = dist(rng);
    fa = ctx(xa);
  }
  return complete_pair(ctx, dom, xa, fa, rng, max_trials, xtol);
}

RunResult min_search_1d(const std::function<double(double)>& objective,
                        std::span<const GivenPoint> given,
                        const SolverConfig& cfg) {
  if (!(cfg.domain.xsup > cfg.domain.xinf)) {
    throw std::invalid_argument("domain upper limit must exceed the lower one");
  }
  if (!(cfg.xtol > 0.0) || !(cfg.ftol > 0.0)) {
    throw std::invalid_argument("tolerances must be positive");
  }
  if (cfg.bounds.delta_bound && !(*cfg.bounds.delta_bound < 0.0)) {
    throw std::invalid_argument("delta_bound must be negative");
  }
  if (cfg.bounds.slope_bound && !(*cfg.bounds.slope_bound < 0.0)) {
    throw std::invalid_argument("slope_bound must be negative");
  }
  if (cfg.bounds.k_ysup < 0.0 || cfg.bounds.k_ysup > 1.0) {
    throw std::invalid_argument("k_ysup must lie in [0, 1]");
  }
  if (cfg.bounds.n_max_failed < 1) {
    throw std::invalid_argument("n_max_failed must be at least 1");
  }
  if (cfg.max_initial_trials < 1) {
    throw std::invalid_argument("max_initial_trials must be at least 1");
  }
  for (const auto& g : given) {
    if (g.y && !std::isfinite(*g.y)) {
      throw std::invalid_argument("given ordinate is not finite");
    }
  }

  RunResult result;
  Trace trace;
  EvalContext ctx(objective, cfg.domain, cfg.max_evals, &trace);
  std::mt19937_64 rng(cfg.rng_seed);
  Polygonal poly;
  std::optional<Best> best;

  const Polygonal::Evaluator counted = [&ctx](double v) { return ctx(v); };

  try {
    auto init = acquire_initial_points(ctx, cfg.domain, given, rng,
                                       cfg.max_initial_trials, cfg.xtol);
    if (!init) {
      Best b{};
      if (ctx.best_seen()) {
        b = *ctx.best_seen();
      } else if (!given.empty() && given[0].y) {
        b = {given[0].x, *given[0].y};
      }
      result.xmin = b.x;
      result.ymin = b.y;
      result.n_evals = ctx.nff();
      result.termination = Termination::ConstantFunction;
      result.trace = std::move(trace);
      return result;
    }

    const auto [xa, fa, xb, fb] = *init;
    best = Best{xb, fb};
    const ResolvedBounds rb = resolve_bounds(cfg.bounds, fb, cfg.domain, cfg.ftol);

    if (!initial_gate(xa, xb, fa, fb, rb)) {
      // not enough variation between the starting points: give up at once
      result.xmin = xb;
      result.ymin = fb;
      result.n_evals = ctx.nff();
      result.termination = Termination::GatedOut;
      result.trace = std::move(trace);
      return result;
    }

    poly.insert(xa, fa, false, cfg.xtol, counted);
    if (poly.insert(xb, fb, false, cfg.xtol, counted).status ==
        InsertStatus::Duplicate) {
      throw std::invalid_argument("starting abscissas coincide under xtol");
    }

    const ExploreOutcome eo = explore(ctx, xa, xb, fa, fb, cfg.xtol, poly, *best);
    interior_subdivide_if_cramped(eo.expansion_count, xa, xb, poly, *best, ctx,
                                  cfg.xtol);

    if (cfg.sliding_cubic_stage) {
      for (double s : sliding_cubic_suspects(poly, cfg.xtol)) {
        trace.record(ctx.nff(), EventKind::Proposal, s, std::nullopt,
                     {{"phase", "sliding_cubic"}, {"method", "cubic"}});
        auto out = poly.insert(s, std::nullopt, false, cfg.xtol, counted);
        if (out.status == InsertStatus::Added && poly[out.index].y < best->y) {
          *best = {poly[out.index].x, poly[out.index].y};
        }
      }
    }

    RefineOptions ropt;
    ropt.xtol = cfg.xtol;
    ropt.ftol = cfg.ftol;
    ropt.bounds = rb;
    result.local_minima = refine_all(poly, ropt, ctx, *best);
    result.xmin = best->x;
    result.ymin = best->y;
    result.n_evals = ctx.nff();
    result.termination = Termination::Converged;
    result.trace = std::move(trace);
    return result;
  } catch (const detail::BudgetSignal&) {
    Best b{};
    if (best) {
      b = *best;
    } else if (ctx.best_seen()) {
      b = *ctx.best_seen();
    }
    if (ctx.best_seen() && ctx.best_seen()->y < b.y) {
      b = *ctx.best_seen();
    }
    result.xmin = b.x;
    result.ymin = b.y;
    for (std::size_t ci : poly.valley_centers()) {
      result.local_minima.push_back({poly[ci].x, poly[ci].y, poly[ci].refined});
    }
    result.n_evals = ctx.nff();
    result.termination = Termination::BudgetExhausted;
    result.trace = std::move(trace);
    return result;
  } catch (const detail::NonFiniteSignal& s) {
    throw EvaluationError(s.x, std::move(trace));
  }
}

} // namespace polymin
