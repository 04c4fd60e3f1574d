#include "polymin/context.hpp"

#include <cassert>
#include <cmath>

namespace polymin {

double EvalContext::operator()(double x) {
  assert(domain_.contains(x));
  if (max_evals_ && nff_ >= *max_evals_) {
    budget_hit_ = true;
    throw detail::BudgetSignal{};
  }
  ++nff_;
  const double fx = objective_(x);
  if (!std::isfinite(fx)) {
    throw detail::NonFiniteSignal{x};
  }
  if (trace_) {
    trace_->record(nff_, EventKind::Evaluation, x, fx);
  }
  if (!best_seen_ || fx < best_seen_->y) {
    best_seen_ = Best{x, fx};
  }
  return fx;
}

} // namespace polymin
