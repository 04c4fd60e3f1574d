#include "polymin/baselines.hpp"

#include <cmath>
#include <stdexcept>

#include "polymin/constants.hpp"

namespace polymin::bench {

BaselineResult baseline_golden(const std::function<double(double)>& f, double a,
                               double b, double c, double tol, Trace* trace) {
  if (!(a < b && b < c)) {
    throw std::invalid_argument("golden-section bracket must satisfy a < b < c");
  }
  int n = 0;
  auto eval = [&](double x) {
    ++n;
    const double y = f(x);
    if (trace) trace->record(n, EventKind::Evaluation, x, y);
    return y;
  };

  double x0 = a, x3 = c, x1, x2;
  if (c - b > b - a) {
    x1 = b;
    x2 = b + kCGold * (c - b);
  } else {
    x2 = b;
    x1 = b - kCGold * (b - a);
  }
  double f1 = eval(x1);
  double f2 = eval(x2);
  while (std::fabs(x3 - x0) > tol * (std::fabs(x1) + std::fabs(x2) + 1.0)) {
    if (f2 < f1) {
      x0 = x1, x1 = x2, f1 = f2;
      x2 = x1 + kCGold * (x3 - x1);
      f2 = eval(x2);
    } else {
      x3 = x2, x2 = x1, f2 = f1;
      x1 = x2 - kCGold * (x2 - x0);
      f1 = eval(x1);
    }
  }
  if (f1 < f2) {
    return {x1, f1, n};
  }
  return {x2, f2, n};
}

BaselineResult baseline_parabola_only(const std::function<double(double)>& f,
                                      const EvalPoint& p1, const EvalPoint& p2,
                                      const EvalPoint& p3, const Domain& dom,
                                      double xtol, double ftol,
                                      const ResolvedBounds& bounds,
                                      Trace* trace) {
  if (!(p1.x < p2.x && p2.x < p3.x) || p2.y > p1.y || p2.y > p3.y) {
    throw std::invalid_argument("parabola-only baseline needs a bracketing triplet");
  }
  EvalContext ctx(f, dom, std::nullopt, trace);
  Polygonal poly;
  const Polygonal::Evaluator counted = [&ctx](double v) { return ctx(v); };
  poly.insert(p1.x, p1.y, false, xtol, counted);
  poly.insert(p2.x, p2.y, false, xtol, counted);
  poly.insert(p3.x, p3.y, false, xtol, counted);

  Best best{p2.x, p2.y};
  RefineOptions opt;
  opt.xtol = xtol;
  opt.ftol = ftol;
  opt.bounds = bounds;
  opt.use_cubic = false;
  refine_valley(p1, p2, p3, poly, opt, ctx, best);
  return {best.x, best.y, ctx.nff()};
}

} // namespace polymin::bench
