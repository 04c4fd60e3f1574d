#include "polymin/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>

#include "polymin/baselines.hpp"
#include "polymin/bracketing.hpp"
#include "polymin/interpolation.hpp"
#include "polymin/solver.hpp"

namespace polymin::bench {

namespace {

struct PhaseAState {
  Polygonal poly;
  Best best{};
  ResolvedBounds bounds{};
  int n_evals = 0;
  bool ok = false; // false when the run was gated out or looked constant
};

// Reproduces Phase A exactly as the full solver performs it, so that the
// baselines start from the same first bracketing triplet.
PhaseAState run_phase_a(const CorpusEntry& e, const BenchRunConfig& cfg,
                        Trace* trace) {
  PhaseAState st;
  EvalContext ctx(e.f, e.domain, std::nullopt, trace);
  std::mt19937_64 rng(cfg.seed);
  const GivenPoint given[] = {{e.start_a, std::nullopt}, {e.start_b, std::nullopt}};
  auto init = acquire_initial_points(ctx, e.domain, given, rng, 16, cfg.xtol);
  if (!init) {
    st.n_evals = ctx.nff();
    return st;
  }
  const auto [xa, fa, xb, fb] = *init;
  BoundsConfig bc;
  bc.enabled = cfg.bounds_enabled;
  st.bounds = resolve_bounds(bc, fb, e.domain, cfg.ftol);
  if (!initial_gate(xa, xb, fa, fb, st.bounds)) {
    st.n_evals = ctx.nff();
    return st;
  }
  const Polygonal::Evaluator counted = [&ctx](double v) { return ctx(v); };
  st.poly.insert(xa, fa, false, cfg.xtol, counted);
  st.poly.insert(xb, fb, false, cfg.xtol, counted);
  st.best = {xb, fb};
  const ExploreOutcome eo =
      explore(ctx, xa, xb, fa, fb, cfg.xtol, st.poly, st.best);
  interior_subdivide_if_cramped(eo.expansion_count, xa, xb, st.poly, st.best,
                                ctx, cfg.xtol);
  st.n_evals = ctx.nff();
  st.ok = true;
  return st;
}

std::optional<std::string> write_trace(const Trace& trace,
                                       const BenchRunConfig& cfg,
                                       const std::string& function,
                                       const std::string& method) {
  if (cfg.trace_verbosity <= 0) {
    return std::nullopt;
  }
  const auto path =
      cfg.out_dir / ("trace_" + function + "_" + method + ".jsonl");
  std::ofstream os(path);
  if (!os) {
    throw std::runtime_error("cannot write trace file " + path.string());
  }
  if (cfg.trace_verbosity >= 2) {
    trace.to_jsonl(os);
  } else {
    // snapshots can be bulky; verbosity 1 keeps events only
    Trace slim;
    for (const auto& ev : trace.events()) {
      slim.record(ev.nff, ev.kind, ev.x, ev.y, ev.detail);
    }
    slim.to_jsonl(os);
  }
  return path.string();
}

} // namespace

BenchReport run_benchmark(const BenchRunConfig& cfg) {
  std::vector<const CorpusEntry*> functions;
  if (cfg.functions.empty()) {
    for (const auto& e : corpus()) functions.push_back(&e);
  } else {
    for (const auto& name : cfg.functions) {
      const CorpusEntry* e = find_entry(name);
      if (!e) throw std::invalid_argument("unknown corpus function: " + name);
      functions.push_back(e);
    }
  }
  std::vector<std::string> methods = cfg.methods;
  if (methods.empty()) {
    methods = {"mixed", "parabola", "golden"};
  }
  for (const auto& m : methods) {
    if (m != "mixed" && m != "parabola" && m != "golden") {
      throw std::invalid_argument("unknown method: " + m);
    }
  }
  std::filesystem::create_directories(cfg.out_dir);

  BenchReport report;
  std::map<std::string, std::map<std::string, int>> evals_by_fn;

  for (const CorpusEntry* e : functions) {
    const OracleMin oracle = dense_grid_oracle(e->f, e->domain);
    for (const auto& method : methods) {
      BenchCell cell;
      cell.function = e->name;
      cell.method = method;
      cell.oracle_x = oracle.x;
      cell.oracle_y = oracle.y;
      try {
        Trace trace;
        if (method == "mixed") {
          SolverConfig sc;
          sc.domain = e->domain;
          sc.xtol = cfg.xtol;
          sc.ftol = cfg.ftol;
          sc.bounds.enabled = cfg.bounds_enabled;
          sc.sliding_cubic_stage = cfg.sliding_cubic;
          sc.rng_seed = cfg.seed;
          const GivenPoint given[] = {{e->start_a, std::nullopt},
                                      {e->start_b, std::nullopt}};
          RunResult rr = min_search_1d(e->f, given, sc);
          cell.n_evals = rr.n_evals;
          cell.xmin = rr.xmin;
          cell.ymin = rr.ymin;
          trace = std::move(rr.trace);
        } else {
          PhaseAState st = run_phase_a(*e, cfg, &trace);
          cell.n_evals = st.n_evals;
          if (st.ok) {
            cell.xmin = st.best.x;
            cell.ymin = st.best.y;
            const auto centers = st.poly.valley_centers();
            if (!centers.empty()) {
              const std::size_t ci = centers.front();
              const EvalPoint& p1 = st.poly[ci - 1];
              const EvalPoint& p2 = st.poly[ci];
              const EvalPoint& p3 = st.poly[ci + 1];
              BaselineResult br;
              if (method == "golden") {
                br = baseline_golden(e->f, p1.x, p2.x, p3.x, cfg.xtol, &trace);
              } else {
                br = baseline_parabola_only(e->f, p1, p2, p3, e->domain,
                                            cfg.xtol, cfg.ftol, st.bounds,
                                            &trace);
              }
              cell.n_evals += br.n_evals;
              if (br.ymin < cell.ymin) {
                cell.xmin = br.xmin;
                cell.ymin = br.ymin;
              }
            }
          }
        }
        const double ytol = cfg.ftol * (1.0 + std::fabs(oracle.y));
        cell.y_error = std::fabs(cell.ymin - oracle.y);
        cell.success = std::fabs(cell.xmin - oracle.x) <=
                           1e-3 * (1.0 + std::fabs(oracle.x)) ||
                       cell.ymin <= oracle.y + ytol;
        if (auto tf = write_trace(trace, cfg, e->name, method)) {
          cell.trace_file = *tf;
        }
        evals_by_fn[e->name][method] = cell.n_evals;
      } catch (const std::exception& ex) {
        cell.error = ex.what();
      }
      report.total_evals += cell.n_evals;
      report.cells.push_back(std::move(cell));
    }
  }

  int comparable = 0, mixed_wins = 0;
  for (const auto& [fn, by_method] : evals_by_fn) {
    auto mi = by_method.find("mixed");
    auto pi = by_method.find("parabola");
    if (mi != by_method.end() && pi != by_method.end()) {
      ++comparable;
      if (mi->second <= pi->second) ++mixed_wins;
    }
  }
  if (comparable > 0) {
    report.mixed_vs_parabola_fraction =
        static_cast<double>(mixed_wins) / comparable;
  }
  return report;
}

void print_report(const BenchReport& report, std::ostream& os) {
  os << std::left << std::setw(18) << "function" << std::setw(10) << "method"
     << std::right << std::setw(8) << "nevals" << std::setw(15) << "xmin"
     << std::setw(15) << "ymin" << std::setw(12) << "|y-f*|" << std::setw(9)
     << "success" << '\n';
  for (const auto& c : report.cells) {
    if (!c.error.empty()) {
      os << std::left << std::setw(18) << c.function << std::setw(10)
         << c.method << "  ERROR: " << c.error << '\n';
      continue;
    }
    os << std::left << std::setw(18) << c.function << std::setw(10) << c.method
       << std::right << std::setw(8) << c.n_evals << std::setw(15)
       << std::setprecision(6) << c.xmin << std::setw(15) << c.ymin
       << std::setw(12) << std::scientific << std::setprecision(2) << c.y_error
       << std::defaultfloat << std::setprecision(6) << std::setw(9)
       << (c.success ? "yes" : "no") << '\n';
  }
  os << "total evaluations: " << report.total_evals << '\n';
  if (report.mixed_vs_parabola_fraction) {
    os << "mixed <= parabola-only evaluations on "
       << 100.0 * *report.mixed_vs_parabola_fraction << "% of functions\n";
  }
}

void write_report_json(const BenchReport& report,
                       const std::filesystem::path& path) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : report.cells) {
    cells.push_back({{"function", c.function},
                     {"method", c.method},
                     {"n_evals", c.n_evals},
                     {"xmin", c.xmin},
                     {"ymin", c.ymin},
                     {"oracle_x", c.oracle_x},
                     {"oracle_y", c.oracle_y},
                     {"y_error", c.y_error},
                     {"success", c.success},
                     {"trace_file", c.trace_file},
                     {"error", c.error}});
  }
  nlohmann::json j{{"schema", "polymin-report/1"},
                   {"cells", cells},
                   {"total_evals", report.total_evals}};
  if (report.mixed_vs_parabola_fraction) {
    j["mixed_vs_parabola_fraction"] = *report.mixed_vs_parabola_fraction;
  }
  std::ofstream os(path);
  if (!os) {
    throw std::runtime_error("cannot write report file " + path.string());
  }
  os << j.dump(2) << '\n';
}

void export_plot_data(const Trace& trace,
                      const std::function<double(double)>& f, const Domain& dom,
                      const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  auto open = [&](const std::string& name) {
    std::ofstream os(out_dir / name);
    if (!os) {
      throw std::runtime_error("cannot write " + (out_dir / name).string());
    }
    os << std::setprecision(17);
    return os;
  };

  {
    auto os = open("samples.tsv");
    os << "x\ty\n";
    const int n = 1000;
    for (int i = 0; i < n; ++i) {
      const double x = dom.xinf + dom.width() * i / (n - 1);
      os << x << '\t' << f(x) << '\n';
    }
  }
  {
    auto os = open("evaluations.tsv");
    os << "ordinal\tnff\tx\ty\n";
    int ordinal = 0;
    for (const auto& ev : trace.events()) {
      if (ev.kind == EventKind::Evaluation && ev.x && ev.y) {
        os << ordinal++ << '\t' << ev.nff << '\t' << *ev.x << '\t' << *ev.y
           << '\n';
      }
    }
  }
  for (const auto& snap : trace.snapshots()) {
    auto os = open("polygonal_pass" + std::to_string(snap.pass) + ".tsv");
    os << "x\ty\trefined\n";
    for (const auto& p : snap.points) {
      os << p.x << '\t' << p.y << '\t' << (p.refined ? 1 : 0) << '\n';
    }
  }
  {
    auto os = open("interpolants.tsv");
    os << "id\tkind\tx\ty\n";
    int id = 0;
    for (const auto& ev : trace.events()) {
      if (ev.kind != EventKind::Proposal || ev.detail.is_null() ||
          !ev.detail.contains("points")) {
        continue;
      }
      const std::string method = ev.detail.value("method", "");
      std::vector<EvalPoint> pts;
      for (const auto& row : ev.detail["points"]) {
        pts.push_back({row[0].get<double>(), row[1].get<double>(), false});
      }
      if (method == "parabola" && pts.size() == 3) {
        const double lo = pts.front().x, hi = pts.back().x;
        for (int i = 0; i < 200; ++i) {
          const double x = lo + (hi - lo) * i / 199.0;
          os << id << '\t' << method << '\t' << x << '\t'
             << parabola_value(pts[0], pts[1], pts[2], x) << '\n';
        }
        ++id;
      } else if (method == "cubic" && pts.size() == 4) {
        const double lo = pts.front().x, hi = pts.back().x;
        for (int i = 0; i < 200; ++i) {
          const double x = lo + (hi - lo) * i / 199.0;
          os << id << '\t' << method << '\t' << x << '\t'
             << cubic_value(pts[0], pts[1], pts[2], pts[3], x) << '\n';
        }
        ++id;
      }
    }
  }
}

} // namespace polymin::bench
