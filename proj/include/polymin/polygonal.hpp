#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace polymin {

/// One evaluated sample of the objective; a vertex of the polygonal.
struct EvalPoint {
  double x = 0.0;
  double y = 0.0;
  bool refined = false; // true once processed as a local-minimum candidate
};

/// Relative near-equality test, deliberately asymmetric: the tolerance is
/// scaled by |a| only.
bool almost_equal_rel(double a, double b, double eps);

enum class InsertStatus { Added, Duplicate };

struct InsertOutcome {
  InsertStatus status;
  std::size_t index; // position of the added point, or of the existing duplicate
};

/// Ordered record of all evaluated points, strictly increasing in x and
/// pairwise distinct under almost_equal_rel with the run's xtol.
class Polygonal {
public:
  using Evaluator = std::function<double(double)>;

  /// Inserts (x, y) keeping sorted order. If an existing point is almost
  /// equal to x under xtol, returns Duplicate without evaluating anything.
  /// When y is absent the evaluator is invoked exactly once at x; this is
  /// the only place the objective is ever called during a run.
  InsertOutcome insert(double x, std::optional<double> y, bool refined,
                       double xtol, const Evaluator& eval);

  const EvalPoint& operator[](std::size_t i) const { return points_[i]; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<EvalPoint>& points() const { return points_; }

  /// Minimum and maximum ordinates. Precondition: non-empty.
  std::pair<double, double> ordinate_range() const;

  /// Indices i such that the triplet (i-1, i, i+1) brackets a valley:
  /// deltap*deltaq <= 0 and the center is not above both neighbors.
  std::vector<std::size_t> valley_centers() const;

  /// Index of the point whose abscissa is exactly x, if present.
  std::optional<std::size_t> index_of(double x) const;

  void mark_refined(std::size_t i) { points_[i].refined = true; }

private:
  std::vector<EvalPoint> points_;
};

} // namespace polymin
