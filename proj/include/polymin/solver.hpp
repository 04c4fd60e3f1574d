#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "polymin/context.hpp"
#include "polymin/refinement.hpp"
#include "polymin/trace.hpp"

namespace polymin {

struct SolverConfig {
  Domain domain;
  double xtol = 1e-6; // relative tolerance on the variable
  double ftol = 1e-6; // relative tolerance on the function
  BoundsConfig bounds;
  bool sliding_cubic_stage = false;
  int max_initial_trials = 16;
  std::optional<int> max_evals; // hard budget; unlimited when unset
  std::uint64_t rng_seed = 0;
};

enum class Termination { Converged, BudgetExhausted, GatedOut, ConstantFunction };

const char* to_string(Termination t);

struct RunResult {
  double xmin = 0.0;
  double ymin = 0.0;
  std::vector<LocalMinimum> local_minima;
  int n_evals = 0;
  Termination termination = Termination::Converged;
  Trace trace;
};

/// A starting point supplied by the caller; the ordinate is evaluated (and
/// counted) when absent.
struct GivenPoint {
  double x;
  std::optional<double> y;
};

struct InitialPair {
  double xa, fa;
  double xb, fb; // ordered so that fb < fa
};

/// Orders/completes the starting pair, taking seeded random steps when points
/// are missing or their values coincide. Empty result means the function
/// looks constant after max_trials samples.
std::optional<InitialPair> acquire_initial_points(EvalContext& ctx,
                                                  const Domain& dom,
                                                  std::span<const GivenPoint> given,
                                                  std::mt19937_64& rng,
                                                  int max_trials, double xtol);

/// Searches for the global minimum of the objective over the configured
/// domain: Phase A exploration followed by Phase B valley refinement.
RunResult min_search_1d(const std::function<double(double)>& objective,
                        std::span<const GivenPoint> given,
                        const SolverConfig& config);

} // namespace polymin
