#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polymin/corpus.hpp"
#include "polymin/trace.hpp"

namespace polymin::bench {

struct BenchRunConfig {
  std::vector<std::string> functions; // empty selects the whole corpus
  std::vector<std::string> methods;   // of {"mixed", "parabola", "golden"}
  std::uint64_t seed = 0;
  double xtol = 1e-6;
  double ftol = 1e-6;
  bool bounds_enabled = true;
  bool sliding_cubic = false;
  std::filesystem::path out_dir = "bench_out";
  int trace_verbosity = 1; // 0: no trace files, 1: events, 2: events + snapshots
};

struct BenchCell {
  std::string function;
  std::string method;
  int n_evals = 0;
  double xmin = 0.0;
  double ymin = 0.0;
  double oracle_x = 0.0;
  double oracle_y = 0.0;
  double y_error = 0.0;
  bool success = false;
  std::string trace_file; // empty when tracing is off or the cell failed
  std::string error;      // non-empty when the cell failed
};

struct BenchReport {
  std::vector<BenchCell> cells;
  int total_evals = 0;
  // fraction of functions on which the mixed method used no more
  // evaluations than the parabola-only baseline (when both methods ran)
  std::optional<double> mixed_vs_parabola_fraction;
};

BenchReport run_benchmark(const BenchRunConfig& cfg);

void print_report(const BenchReport& report, std::ostream& os);
void write_report_json(const BenchReport& report,
                       const std::filesystem::path& path);

/// Emits plot-ready columnar files from a trace: dense objective samples,
/// per-pass polygonal snapshots, evaluated points in order, and each recorded
/// interpolant sampled at 200 points over its defining span.
void export_plot_data(const Trace& trace,
                      const std::function<double(double)>& f, const Domain& dom,
                      const std::filesystem::path& out_dir);

} // namespace polymin::bench
