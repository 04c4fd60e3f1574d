#pragma once

#include <functional>
#include <string>
#include <vector>

#include "polymin/context.hpp"

namespace polymin::bench {

/// A compiled-in benchmark objective. The oracle minimum is never stored:
/// it is recomputed by dense_grid_oracle so that reported errors are always
/// measured against a freshly verified reference.
struct CorpusEntry {
  std::string name;
  std::string description;
  std::function<double(double)> f;
  Domain domain;
  int modality; // number of local minima (approximate, for reporting)
  // suggested deterministic starting abscissas for head-to-head runs
  double start_a;
  double start_b;
};

const std::vector<CorpusEntry>& corpus();

const CorpusEntry* find_entry(const std::string& name);

struct OracleMin {
  double x;
  double y;
};

/// Dense-grid scan followed by a golden-section polish of the best cell.
OracleMin dense_grid_oracle(const std::function<double(double)>& f,
                            const Domain& dom, int grid_points = 1'000'000);

} // namespace polymin::bench
