#pragma once

#include <functional>

#include "polymin/context.hpp"
#include "polymin/refinement.hpp"

namespace polymin::bench {

struct BaselineResult {
  double xmin = 0.0;
  double ymin = 0.0;
  int n_evals = 0;
};

/// Classic golden-section search inside a valid bracketing triplet a < b < c
/// with f(b) <= f(a) and f(b) <= f(c). Deterministic; counts evaluations.
BaselineResult baseline_golden(const std::function<double(double)>& f, double a,
                               double b, double c, double tol,
                               Trace* trace = nullptr);

/// Refinement of a single bracketing triplet with the cubic steps disabled
/// (parabola, then golden fallback). Shares all machinery with refine_valley.
BaselineResult baseline_parabola_only(const std::function<double(double)>& f,
                                      const EvalPoint& p1, const EvalPoint& p2,
                                      const EvalPoint& p3, const Domain& dom,
                                      double xtol, double ftol,
                                      const ResolvedBounds& bounds,
                                      Trace* trace = nullptr);

} // namespace polymin::bench
