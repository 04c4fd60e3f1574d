#include "polymin/refinement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "polymin/constants.hpp"
#include "polymin/interpolation.hpp"

namespace polymin {

ResolvedBounds resolve_bounds(const BoundsConfig& cfg, double fb,
                              const Domain& dom, double ftol) {
  ResolvedBounds rb;
  rb.enabled = cfg.enabled;
  rb.k_ysup = cfg.k_ysup;
  rb.n_max_failed = cfg.n_max_failed;
  const double scale = -ftol * (1.0 + std::fabs(fb));
  rb.delta_bound = cfg.delta_bound.value_or(scale);
  rb.slope_bound = cfg.slope_bound.value_or(scale / dom.width());
  return rb;
}

bool initial_gate(double xa, double xb, double fa, double fb,
                  const ResolvedBounds& bounds) {
  if (!bounds.enabled) {
    return true;
  }
  const bool shallow_drop = fb - fa > bounds.delta_bound;
  const bool shallow_slope =
      (fb - fa) / (std::fabs(xb - xa) + kEps2) > bounds.slope_bound;
  return !(shallow_drop && shallow_slope);
}

bool candidate_gate(const EvalPoint& p1, const EvalPoint& p2,
                    const EvalPoint& p3, const ResolvedBounds& bounds,
                    double fpmin, double fpmax, double ftol) {
  if (p2.refined) {
    return false;
  }
  const double deltap = p2.y - p1.y;
  const double deltaq = p3.y - p2.y;
  const double ytol = ftol * (1.0 + std::fabs(p2.y));
  if (!bounds.enabled) {
    return deltap < -ytol || deltaq > ytol;
  }
  return (deltap < bounds.delta_bound || deltaq > -bounds.delta_bound) &&
         (deltap / (p2.x - p1.x) < bounds.slope_bound ||
          deltaq / (p3.x - p2.x) < bounds.slope_bound) &&
         p2.y < fpmax - (fpmax - fpmin) * bounds.k_ysup;
}

namespace {

bool strictly_inside(double x, double lo, double hi) {
  return x > lo && x < hi;
}

nlohmann::json points_payload(std::initializer_list<const EvalPoint*> pts) {
  nlohmann::json arr = nlohmann::json::array();
  for (const EvalPoint* p : pts) {
    arr.push_back({p->x, p->y});
  }
  return arr;
}

} // namespace

int refine_valley(const EvalPoint& s1, const EvalPoint& s2, const EvalPoint& s3,
                  Polygonal& poly, const RefineOptions& opt, EvalContext& ctx,
                  Best& best) {
  Trace* trace = ctx.trace();
  EvalPoint p1 = s1, p2 = s2, p3 = s3;
  double xloc = s2.x, yloc = s2.y; // current local minimum of this valley
  int changes = 0;
  int n_failed = 0;

  // Re-reads the triplet bracketing the current minimum from the polygonal.
  // Fails only if the minimum sits at an end of the polygonal.
  auto load_triplet = [&]() -> bool {
    auto idx = poly.index_of(xloc);
    if (!idx || *idx == 0 || *idx + 1 == poly.size()) {
      return false;
    }
    p1 = poly[*idx - 1];
    p2 = poly[*idx];
    p3 = poly[*idx + 1];
    return true;
  };

  auto mark_min = [&]() {
    if (auto idx = poly.index_of(xloc)) {
      poly.mark_refined(*idx);
    }
  };

  // Bookkeeping for a freshly evaluated point: local minimum, global best,
  // and the consecutive-failure counter.
  auto note_added = [&](const EvalPoint& np) {
    ++changes;
    if (np.y < yloc) {
      xloc = np.x, yloc = np.y;
    }
    if (np.y < best.y) {
      best = {np.x, np.y};
      n_failed = 0;
      if (trace) trace->record(ctx.nff(), EventKind::Improvement, np.x, np.y);
    } else {
      ++n_failed;
    }
  };

  auto insert_at = [&](double x) {
    return poly.insert(x, std::nullopt, false, opt.xtol,
                       [&ctx](double v) { return ctx(v); });
  };

  auto propose = [&](const char* method, double x,
                     nlohmann::json pts) {
    if (trace) {
      trace->record(ctx.nff(), EventKind::Proposal, x, std::nullopt,
                    {{"phase", "refine"},
                     {"method", method},
                     {"points", std::move(pts)}});
    }
  };

  enum class Next { None, FarCubic, Gold, Done, Static };

  while (true) {
    const double ytol = opt.ftol * (1.0 + std::fabs(p2.y));
    if (p1.y - p2.y < ytol && p3.y - p2.y < ytol) {
      break; // convergence in y: the triplet is flat at tolerance level
    }
    if (n_failed >= opt.bounds.n_max_failed) {
      break; // too many evaluations without improving the global minimum
    }

    Next next = Next::Gold;

    // step 1: parabola through the current triplet
    if (auto pm = parabola_min(p1, p2, p3);
        pm && strictly_inside(pm->x, p1.x, p3.x)) {
      propose("parabola", pm->x, points_payload({&p1, &p2, &p3}));
      auto out = insert_at(pm->x);
      if (out.status == InsertStatus::Added) {
        const EvalPoint np = poly[out.index];
        const bool improved = np.y < yloc;
        note_added(np);
        if (improved || !opt.use_cubic) {
          next = Next::Done;
        } else {
          // step 2: cubic through the triplet plus the point just found
          std::array<EvalPoint, 4> q{p1, p2, p3, np};
          std::sort(q.begin(), q.end(),
                    [](const EvalPoint& a, const EvalPoint& b) { return a.x < b.x; });
          const CubicResult cm = cubic_min(q[0], q[1], q[2], q[3]);
          if (cm.status == CubicStatus::Minimum &&
              strictly_inside(cm.min.x, q[0].x, q[3].x)) {
            propose("cubic", cm.min.x, points_payload({&q[0], &q[1], &q[2], &q[3]}));
            auto out2 = insert_at(cm.min.x);
            if (out2.status == InsertStatus::Added) {
              note_added(poly[out2.index]);
              next = Next::Done;
            } else {
              next = Next::FarCubic;
            }
          } else {
            next = Next::Gold;
          }
        }
      } else {
        next = opt.use_cubic ? Next::FarCubic : Next::Gold;
      }
    }

    // step 3: the direct proposal was a duplicate; with four or more points
    // available, try one cubic over the neighborhood of the current minimum,
    // extended on the side whose fourth point is closer.
    if (next == Next::FarCubic) {
      next = Next::Gold;
      if (poly.size() >= 4) {
        auto idx = poly.index_of(xloc);
        if (idx && *idx >= 1 && *idx + 1 < poly.size()) {
          const std::size_t i = *idx;
          const double huge = std::numeric_limits<double>::infinity();
          const double x02 = i >= 2 ? poly[i].x - poly[i - 2].x : huge;
          const double x24 = i + 2 < poly.size() ? poly[i + 2].x - poly[i].x : huge;
          std::array<const EvalPoint*, 4> q{};
          if (x02 < x24) {
            q = {&poly[i - 2], &poly[i - 1], &poly[i], &poly[i + 1]};
          } else if (i + 2 < poly.size()) {
            q = {&poly[i - 1], &poly[i], &poly[i + 1], &poly[i + 2]};
          }
          if (q[0]) {
            const CubicResult cm = cubic_min(*q[0], *q[1], *q[2], *q[3]);
            if (cm.status == CubicStatus::Minimum &&
                strictly_inside(cm.min.x, q[0]->x, q[3]->x)) {
              propose("cubic", cm.min.x, points_payload({q[0], q[1], q[2], q[3]}));
              auto out = insert_at(cm.min.x);
              if (out.status == InsertStatus::Added) {
                note_added(poly[out.index]);
                next = Next::Done;
              }
            }
          }
        }
      }
    }

    // step 4: golden subdivision of the major interval around the minimum
    if (next == Next::Gold) {
      if (!load_triplet()) {
        break; // minimum at the polygonal's edge: nothing left to subdivide
      }
      const double xg = golden_subdivide(p1, p2, p3);
      propose("golden", xg, points_payload({&p1, &p2, &p3}));
      auto out = insert_at(xg);
      if (out.status == InsertStatus::Added) {
        note_added(poly[out.index]);
      } else {
        mark_min();
        break; // duplicate after every fallback: x-space is exhausted
      }
    }

    mark_min();
    if (!load_triplet()) {
      break;
    }
  }

  // the minimum must be marked even when it was never improved
  mark_min();
  return changes;
}

std::vector<LocalMinimum> refine_all(Polygonal& poly, const RefineOptions& opt,
                                     EvalContext& ctx, Best& best) {
  Trace* trace = ctx.trace();
  int pass = 0;
  bool changed = true;
  while (changed) {
    ++pass;
    if (trace) {
      trace->record(ctx.nff(), EventKind::PassBegin, std::nullopt, std::nullopt,
                    {{"pass", pass}});
      trace->snapshot(pass, poly);
    }
    // scan a snapshot; insertions go to the working polygonal so that a
    // pass never re-enters its own additions
    const Polygonal snapshot = poly;
    double fpmin = 0.0, fpmax = 0.0;
    if (opt.bounds.enabled) {
      std::tie(fpmin, fpmax) = snapshot.ordinate_range();
    }
    int changes = 0;
    for (std::size_t ci : snapshot.valley_centers()) {
      const EvalPoint& p1 = snapshot[ci - 1];
      const EvalPoint& p2 = snapshot[ci];
      const EvalPoint& p3 = snapshot[ci + 1];
      if (candidate_gate(p1, p2, p3, opt.bounds, fpmin, fpmax, opt.ftol)) {
        if (trace) {
          trace->record(ctx.nff(), EventKind::CandidateAccepted, p2.x, p2.y);
        }
        changes += refine_valley(p1, p2, p3, poly, opt, ctx, best);
      } else if (trace) {
        trace->record(ctx.nff(), EventKind::CandidateRejected, p2.x, p2.y,
                      {{"refined", p2.refined}});
      }
    }
    if (trace) {
      trace->record(ctx.nff(), EventKind::PassEnd, std::nullopt, std::nullopt,
                    {{"pass", pass}, {"changes", changes}});
    }
    changed = changes > 0;
  }

  std::vector<LocalMinimum> out;
  for (std::size_t ci : poly.valley_centers()) {
    out.push_back({poly[ci].x, poly[ci].y, poly[ci].refined});
  }
  return out;
}

} // namespace polymin
