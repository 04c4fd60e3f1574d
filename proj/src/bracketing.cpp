#include "polymin/bracketing.hpp"

#include "polymin/constants.hpp"

namespace polymin {

BoundaryAdjust adjust_to_boundary(double xa, double xb, double xc,
                                  double min_ratio, const Domain& dom) {
  if (xb > xa) { // moving toward xsup
    if (xc >= dom.xsup) {
      return {dom.xsup, true};
    }
    if ((dom.xsup - xc) / (xc - xb) < min_ratio) {
      return {dom.xsup, false}; // the residual gap is not worth a separate step
    }
    return {xc, false};
  }
  // moving toward xinf
  if (xc <= dom.xinf) {
    return {dom.xinf, true};
  }
  if ((xc - dom.xinf) / (xb - xc) < min_ratio) {
    return {dom.xinf, false};
  }
  return {xc, false};
}

namespace {

// Inserts a fresh evaluation into the polygonal and updates the running best.
// Returns the evaluated ordinate, or nothing on a Duplicate outcome.
std::optional<double> add_and_track(Polygonal& poly, double x, double xtol,
                                    EvalContext& ctx, Best& best) {
  auto out = poly.insert(x, std::nullopt, false, xtol,
                         [&ctx](double v) { return ctx(v); });
  if (out.status == InsertStatus::Duplicate) {
    return std::nullopt;
  }
  const double y = poly[out.index].y;
  if (y < best.y) {
    best = {x, y};
    if (ctx.trace()) ctx.trace()->record(ctx.nff(), EventKind::Improvement, x, y);
  }
  return y;
}

} // namespace

ExploreOutcome explore(EvalContext& ctx, double xa, double xb, double fa,
                       double fb, double xtol, Polygonal& poly, Best& best) {
  const Domain& dom = ctx.domain();
  Trace* trace = ctx.trace();
  ExploreOutcome out;
  const double K = kGold; // (1+K) is the amplification factor of the interval
  bool clip = false;

  do {
    double xc = xb + K * (xb - xa);
    if (trace) {
      trace->record(ctx.nff(), EventKind::Proposal, xc, std::nullopt,
                    {{"phase", "explore"}});
    }
    const BoundaryAdjust adj = adjust_to_boundary(xa, xb, xc, kMinRatio, dom);
    clip = adj.clipped;
    if (trace && (adj.clipped || adj.x != xc)) {
      trace->record(ctx.nff(), EventKind::Adjustment, adj.x, std::nullopt,
                    {{"clipped", adj.clipped}});
    }
    xc = adj.x;
    if (!clip) ++out.expansion_count; // only full expansions are counted
    auto fc = add_and_track(poly, xc, xtol, ctx, best);
    if (!fc) {
      // point coincides with an existing one: the boundary (or the xtol
      // granularity) has been reached
      out.boundary_reached = true;
      break;
    }
    if (*fc >= fb) {
      // {xa, xb, xc} encloses a local minimum; probe once more before stopping
      if (trace) {
        trace->record(ctx.nff(), EventKind::TripletFound, xb, fb,
                      {{"left", xa}, {"right", xc}});
      }
      double xd = xc + K * (xc - xa);
      if (trace) {
        trace->record(ctx.nff(), EventKind::Proposal, xd, std::nullopt,
                      {{"phase", "explore"}});
      }
      const BoundaryAdjust adjd = adjust_to_boundary(xa, xc, xd, kMinRatio, dom);
      clip = adjd.clipped;
      if (trace && (adjd.clipped || adjd.x != xd)) {
        trace->record(ctx.nff(), EventKind::Adjustment, adjd.x, std::nullopt,
                      {{"clipped", adjd.clipped}});
      }
      xd = adjd.x;
      if (!clip) ++out.expansion_count;
      auto fd = add_and_track(poly, xd, xtol, ctx, best);
      if (!fd) {
        out.boundary_reached = true;
        break;
      }
      if (*fd >= *fc) {
        // the function rose twice in a row: no further minima in sight
        if (trace) trace->record(ctx.nff(), EventKind::RiseConfirmed, xd, *fd);
        break;
      }
      // descent resumed past a hump: keep exploring
      xa = xc, fa = *fc;
      xb = xd, fb = *fd;
    } else {
      xb = xc, fb = *fc; // still going downhill
    }
  } while (!clip);

  if (clip) out.boundary_reached = true;
  return out;
}

void interior_subdivide_if_cramped(int expansion_count, double xaa, double xbb,
                                   Polygonal& poly, Best& best,
                                   EvalContext& ctx, double xtol) {
  if (expansion_count >= 2) {
    return;
  }
  const double xc = xaa + kGold * (xbb - xaa); // between a and b, closer to b
  if (ctx.trace()) {
    ctx.trace()->record(ctx.nff(), EventKind::Proposal, xc, std::nullopt,
                        {{"phase", "interior_subdivide"}});
  }
  add_and_track(poly, xc, xtol, ctx, best); // Duplicate is a no-op
}

} // namespace polymin
