#include "polymin/polygonal.hpp"

#include <algorithm>
#include <cmath>

namespace polymin {

bool almost_equal_rel(double a, double b, double eps) {
  return std::fabs(a - b) < eps * (1.0 + std::fabs(a));
}

InsertOutcome Polygonal::insert(double x, std::optional<double> y, bool refined,
                                double xtol, const Evaluator& eval) {
  // Scan in ascending order: the candidate is compared against each existing
  // abscissa, candidate first (the asymmetric side of the tolerance).
  std::size_t pos = points_.size();
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (almost_equal_rel(x, points_[i].x, xtol)) {
      return {InsertStatus::Duplicate, i};
    }
    if (points_[i].x > x) {
      pos = i;
      break;
    }
  }
  EvalPoint p;
  p.x = x;
  p.y = y ? *y : eval(x);
  p.refined = refined;
  points_.insert(points_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return {InsertStatus::Added, pos};
}

std::pair<double, double> Polygonal::ordinate_range() const {
  double lo = points_.front().y, hi = lo;
  for (const auto& p : points_) {
    lo = std::min(lo, p.y);
    hi = std::max(hi, p.y);
  }
  return {lo, hi};
}

std::vector<std::size_t> Polygonal::valley_centers() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < points_.size(); ++i) {
    const double deltap = points_[i].y - points_[i - 1].y;
    const double deltaq = points_[i + 1].y - points_[i].y;
    if (deltap * deltaq <= 0.0 &&
        points_[i].y <= std::max(points_[i - 1].y, points_[i + 1].y)) {
      out.push_back(i);
    }
  }
  return out;
}

std::optional<std::size_t> Polygonal::index_of(double x) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), x,
                             [](const EvalPoint& p, double v) { return p.x < v; });
  if (it != points_.end() && it->x == x) {
    return static_cast<std::size_t>(it - points_.begin());
  }
  return std::nullopt;
}

} // namespace polymin
