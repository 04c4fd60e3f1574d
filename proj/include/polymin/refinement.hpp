#pragma once

#include <optional>
#include <vector>

#include "polymin/context.hpp"
#include "polymin/polygonal.hpp"

namespace polymin {

/// Pruning thresholds for Phase B. delta_bound and slope_bound default to a
/// scale-free construction from the starting ordinate when left unset.
struct BoundsConfig {
  bool enabled = true;
  std::optional<double> delta_bound; // must be negative when set
  std::optional<double> slope_bound; // must be negative when set
  double k_ysup = 0.5;               // band fraction in [0, 1]
  int n_max_failed = 4; // consecutive non-improving evaluations allowed
};

struct ResolvedBounds {
  bool enabled = true;
  double delta_bound = -1e-6;
  double slope_bound = -1e-6;
  double k_ysup = 0.5;
  int n_max_failed = 4;
};

/// Fills unset bound thresholds from the starting ordinate fb and the domain.
ResolvedBounds resolve_bounds(const BoundsConfig& cfg, double fb,
                              const Domain& dom, double ftol);

/// Decides whether the run is worth starting at all: with bounds enabled,
/// rejects when both the drop fb-fa and its slope are shallower than the
/// configured thresholds.
bool initial_gate(double xa, double xb, double fa, double fb,
                  const ResolvedBounds& bounds);

/// Decides whether a valley triplet deserves refinement.
bool candidate_gate(const EvalPoint& p1, const EvalPoint& p2,
                    const EvalPoint& p3, const ResolvedBounds& bounds,
                    double fpmin, double fpmax, double ftol);

struct RefineOptions {
  double xtol = 1e-6;
  double ftol = 1e-6;
  ResolvedBounds bounds;
  bool use_cubic = true; // disabled for the parabola-only baseline
};

/// Refines one valley: parabola, then cubic, then golden subdivision, until
/// y-convergence, x-space exhaustion, or the failure budget.
/// Returns the number of points added to the polygonal.
int refine_valley(const EvalPoint& s1, const EvalPoint& s2, const EvalPoint& s3,
                  Polygonal& poly, const RefineOptions& opt, EvalContext& ctx,
                  Best& best);

struct LocalMinimum {
  double x;
  double y;
  bool refined;
};

/// Phase B driver: repeated passes of valley scanning and refinement until a
/// pass adds no points. Returns the valley minima of the final polygonal.
std::vector<LocalMinimum> refine_all(Polygonal& poly, const RefineOptions& opt,
                                     EvalContext& ctx, Best& best);

} // namespace polymin
