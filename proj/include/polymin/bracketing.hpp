#pragma once

#include "polymin/context.hpp"
#include "polymin/polygonal.hpp"

namespace polymin {

struct BoundaryAdjust {
  double x;
  bool clipped; // true only when the proposed point was outside the domain
};

/// Adjusts a proposed step xc (taken from xb, moving away from xa) against the
/// domain limits: proposals beyond a limit are clipped onto it; proposals
/// whose residual gap to the limit is below min_ratio of the step are snapped
/// onto it without counting as clipped.
BoundaryAdjust adjust_to_boundary(double xa, double xb, double xc,
                                  double min_ratio, const Domain& dom);

struct ExploreOutcome {
  int expansion_count = 0;
  bool boundary_reached = false;
};

/// Phase A: extend the initial interval with golden-ratio magnified steps
/// until a confirmed rise (two consecutive steps up) or the boundary.
/// Both initial points must already be in the polygonal, with fb < fa.
ExploreOutcome explore(EvalContext& ctx, double xa, double xb, double fa,
                       double fb, double xtol, Polygonal& poly, Best& best);

/// If exploration managed fewer than two full expansions the initial segment
/// dominates the polygonal; sample its interior at the golden point.
void interior_subdivide_if_cramped(int expansion_count, double xaa, double xbb,
                                   Polygonal& poly, Best& best,
                                   EvalContext& ctx, double xtol);

} // namespace polymin
