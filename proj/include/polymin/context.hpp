#pragma once

#include <functional>
#include <optional>
#include <stdexcept>

#include "polymin/trace.hpp"

namespace polymin {

struct Domain {
  double xinf = 0.0;
  double xsup = 1.0;

  double width() const { return xsup - xinf; }
  bool contains(double x) const { return x >= xinf && x <= xsup; }
};

/// Running global minimum of a run.
struct Best {
  double x = 0.0;
  double y = 0.0;
};

/// The objective produced a non-finite value; carries the offending abscissa
/// and the partial trace of the run.
class EvaluationError : public std::runtime_error {
public:
  EvaluationError(double x, Trace trace)
      : std::runtime_error("objective returned a non-finite value"),
        x_(x),
        trace_(std::move(trace)) {}

  double where() const { return x_; }
  const Trace& partial_trace() const { return trace_; }

private:
  double x_;
  Trace trace_;
};

namespace detail {
// Internal unwind signals, caught by min_search_1d.
struct BudgetSignal {};
struct NonFiniteSignal {
  double x;
};
} // namespace detail

/// Counted objective evaluator. Every objective invocation of a run goes
/// through operator(), which stamps a trace event and enforces the optional
/// evaluation budget.
class EvalContext {
public:
  EvalContext(std::function<double(double)> objective, Domain domain,
              std::optional<int> max_evals = std::nullopt,
              Trace* trace = nullptr)
      : objective_(std::move(objective)),
        domain_(domain),
        max_evals_(max_evals),
        trace_(trace) {}

  double operator()(double x);

  int nff() const { return nff_; }
  const Domain& domain() const { return domain_; }
  Trace* trace() const { return trace_; }
  bool budget_hit() const { return budget_hit_; }
  const std::optional<Best>& best_seen() const { return best_seen_; }

private:
  std::function<double(double)> objective_;
  Domain domain_;
  std::optional<int> max_evals_;
  Trace* trace_;
  int nff_ = 0;
  bool budget_hit_ = false;
  std::optional<Best> best_seen_;
};

} // namespace polymin
