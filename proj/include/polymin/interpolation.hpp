#pragma once

#include <optional>
#include <vector>

#include "polymin/polygonal.hpp"

namespace polymin {

/// Minimum of an interpolant: abscissa plus the interpolant's predicted
/// ordinate there (a prediction, not a function evaluation).
struct InterpMin {
  double x;
  double y_predicted;
};

/// Value of the Lagrange parabola through three points, at x.
double parabola_value(const EvalPoint& p1, const EvalPoint& p2,
                      const EvalPoint& p3, double x);

/// Value of the Lagrange cubic through four points, at x.
double cubic_value(const EvalPoint& p1, const EvalPoint& p2,
                   const EvalPoint& p3, const EvalPoint& p4, double x);

/// Minimum of the parabola through three pairwise-distinct abscissas.
/// Empty when the parabola is concave or flat (no minimum).
std::optional<InterpMin> parabola_min(const EvalPoint& p1, const EvalPoint& p2,
                                      const EvalPoint& p3);

enum class CubicStatus {
  Minimum,   // an interior local minimum exists
  NoMinimum, // derivative has no real distinct roots (monotone/inflection)
  Degenerate // leading coefficient vanishes; data is effectively parabolic
};

struct CubicResult {
  CubicStatus status;
  InterpMin min{}; // valid only when status == Minimum
};

/// Minimum of the cubic through four strictly increasing abscissas.
CubicResult cubic_min(const EvalPoint& p1, const EvalPoint& p2,
                      const EvalPoint& p3, const EvalPoint& p4);

/// Golden-ratio subdivision of the major subinterval of x1 < x2 < x3.
/// The result is strictly inside (x1, x3).
double golden_subdivide(const EvalPoint& p1, const EvalPoint& p2,
                        const EvalPoint& p3);

/// Suspect minimum abscissas from a sliding cubic over each window of four
/// consecutive polygonal points. Degenerate windows fall back to a parabola.
std::vector<double> sliding_cubic_suspects(const Polygonal& poly, double xtol);

} // namespace polymin
