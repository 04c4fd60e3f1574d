#include "polymin/interpolation.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "polymin/constants.hpp"

namespace polymin {

double parabola_value(const EvalPoint& p1, const EvalPoint& p2,
                      const EvalPoint& p3, double x) {
  const double xa = p1.x, fa = p1.y;
  const double xb = p2.x, fb = p2.y;
  const double xc = p3.x, fc = p3.y;
  const double A = fa / (xa - xb) / (xa - xc);
  const double B = fb / (xb - xa) / (xb - xc);
  const double C = fc / (xc - xa) / (xc - xb);
  return A * (x - xb) * (x - xc) + B * (x - xa) * (x - xc) +
         C * (x - xa) * (x - xb);
}

std::optional<InterpMin> parabola_min(const EvalPoint& p1, const EvalPoint& p2,
                                      const EvalPoint& p3) {
  const double xa = p1.x, fa = p1.y;
  const double xb = p2.x, fb = p2.y;
  const double xc = p3.x, fc = p3.y;
  const double A = fa / (xa - xb) / (xa - xc);
  const double B = fb / (xb - xa) / (xb - xc);
  const double C = fc / (xc - xa) / (xc - xb);
  const double S = A + B + C; // leading coefficient: must be positive for a minimum
  if (!(S > 0.0)) {
    return std::nullopt;
  }
  const double xmin = (A * (xb + xc) + B * (xa + xc) + C * (xa + xb)) / (2.0 * S);
  return InterpMin{xmin, parabola_value(p1, p2, p3, xmin)};
}

double cubic_value(const EvalPoint& p1, const EvalPoint& p2,
                   const EvalPoint& p3, const EvalPoint& p4, double x) {
  const double xa = p1.x, fa = p1.y;
  const double xb = p2.x, fb = p2.y;
  const double xc = p3.x, fc = p3.y;
  const double xd = p4.x, fd = p4.y;
  const double AA = fa / (xa - xb) / (xa - xc) / (xa - xd);
  const double BB = fb / (xb - xa) / (xb - xc) / (xb - xd);
  const double CC = fc / (xc - xa) / (xc - xb) / (xc - xd);
  const double DD = fd / (xd - xa) / (xd - xb) / (xd - xc);
  return AA * (x - xb) * (x - xc) * (x - xd) +
         BB * (x - xa) * (x - xc) * (x - xd) +
         CC * (x - xa) * (x - xb) * (x - xd) +
         DD * (x - xa) * (x - xb) * (x - xc);
}

CubicResult cubic_min(const EvalPoint& p1, const EvalPoint& p2,
                      const EvalPoint& p3, const EvalPoint& p4) {
  const double xa = p1.x, fa = p1.y;
  const double xb = p2.x, fb = p2.y;
  const double xc = p3.x, fc = p3.y;
  const double xd = p4.x, fd = p4.y;
  const double AA = fa / (xa - xb) / (xa - xc) / (xa - xd);
  const double BB = fb / (xb - xa) / (xb - xc) / (xb - xd);
  const double CC = fc / (xc - xa) / (xc - xb) / (xc - xd);
  const double DD = fd / (xd - xa) / (xd - xb) / (xd - xc);

  // The cubic is S*x^3 - B_*x^2 + C_*x - ..., with A_ = 3S; its derivative is
  // A_*x^2 - 2*B_*x + C_ and the second derivative sign is that of A_*x - B_.
  const double A_ = 3.0 * (AA + BB + CC + DD);
  const double B_ = AA * (xb + xc + xd) + BB * (xa + xc + xd) +
                    CC * (xa + xb + xd) + DD * (xa + xb + xc);
  const double C_ = AA * (xb * xc + xb * xd + xc * xd) +
                    BB * (xa * xc + xa * xd + xc * xd) +
                    CC * (xa * xb + xa * xd + xb * xd) +
                    DD * (xa * xb + xa * xc + xb * xc);

  if (std::fabs(A_) <= 1e-12 * std::max(1.0, std::fabs(B_))) {
    return {CubicStatus::Degenerate};
  }
  const double QQ = B_ * B_ - A_ * C_;
  if (!(QQ > 0.0)) {
    return {CubicStatus::NoMinimum};
  }
  const double root = std::sqrt(QQ);
  const double u1 = (B_ + root) / A_;
  const double u2 = (B_ - root) / A_;
  // keep the critical point where the second derivative is positive
  const double u = (A_ * u1 - B_ > 0.0) ? u1 : u2;
  return {CubicStatus::Minimum, InterpMin{u, cubic_value(p1, p2, p3, p4, u)}};
}

double golden_subdivide(const EvalPoint& p1, const EvalPoint& p2,
                        const EvalPoint& p3) {
  if (p2.x - p1.x > p3.x - p2.x) {
    return p2.x - kGold * (p3.x - p2.x);
  }
  return p2.x + kGold * (p2.x - p1.x);
}

std::vector<double> sliding_cubic_suspects(const Polygonal& poly, double xtol) {
  std::vector<double> out;
  if (poly.size() < 4) {
    return out;
  }
  auto is_known = [&](double x) {
    for (const auto& p : poly.points()) {
      if (almost_equal_rel(x, p.x, xtol)) return true;
    }
    for (double s : out) {
      if (almost_equal_rel(x, s, xtol)) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i + 3 < poly.size(); ++i) {
    const EvalPoint& a = poly[i];
    const EvalPoint& b = poly[i + 1];
    const EvalPoint& c = poly[i + 2];
    const EvalPoint& d = poly[i + 3];
    std::optional<double> suspect;
    const CubicResult cr = cubic_min(a, b, c, d);
    if (cr.status == CubicStatus::Minimum) {
      suspect = cr.min.x;
    } else if (cr.status == CubicStatus::Degenerate) {
      // effectively parabolic data: take the parabola vertex instead
      auto pm = parabola_min(a, b, c);
      if (!pm) pm = parabola_min(b, c, d);
      if (pm) suspect = pm->x;
    }
    if (suspect && *suspect > a.x && *suspect < d.x && !is_known(*suspect)) {
      out.push_back(*suspect);
    }
  }
  return out;
}

} // namespace polymin
