#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polymin/benchmark.hpp"
#include "polymin/corpus.hpp"

using namespace polymin;
using namespace polymin::bench;

int main(int argc, char** argv) {
  CLI::App app{"One-dimensional global minimization benchmark harness"};
  app.require_subcommand(1);

  // bench list
  auto* list_cmd = app.add_subcommand("list", "List the built-in objective corpus");

  // bench run
  BenchRunConfig cfg;
  std::string bounds_mode = "on";
  auto* run_cmd = app.add_subcommand("run", "Run methods over the corpus");
  run_cmd
      ->add_option("--functions", cfg.functions,
                   "Corpus functions to run (default: all)")
      ->delimiter(',');
  run_cmd
      ->add_option("--methods", cfg.methods,
                   "Methods: mixed, parabola, golden (default: all)")
      ->delimiter(',');
  run_cmd->add_option("--seed", cfg.seed, "RNG seed");
  run_cmd->add_option("--xtol", cfg.xtol, "Relative tolerance on x");
  run_cmd->add_option("--ftol", cfg.ftol, "Relative tolerance on f");
  run_cmd->add_option("--bounds", bounds_mode, "Pruning bounds: on|off")
      ->check(CLI::IsMember({"on", "off"}));
  run_cmd->add_flag("--sliding-cubic", cfg.sliding_cubic,
                    "Enable the sliding-cubic polygonal refinement stage");
  run_cmd->add_option("--out", cfg.out_dir, "Output directory");
  run_cmd->add_option("--trace-verbosity", cfg.trace_verbosity,
                      "0: none, 1: events, 2: events + snapshots")
      ->check(CLI::Range(0, 2));

  // bench export
  std::string trace_path, function_name, export_dir = "plot_out";
  auto* export_cmd =
      app.add_subcommand("export", "Turn a trace file into plot-ready data");
  export_cmd->add_option("--trace", trace_path, "Trace file (jsonl)")->required();
  export_cmd->add_option("--function", function_name, "Corpus function name")
      ->required();
  export_cmd->add_option("--out", export_dir, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list_cmd) {
      for (const auto& e : corpus()) {
        std::cout << e.name << "  [" << e.domain.xinf << ", " << e.domain.xsup
                  << "]  ~" << e.modality << " minima  " << e.description
                  << '\n';
      }
      return 0;
    }
    if (*run_cmd) {
      cfg.bounds_enabled = bounds_mode == "on";
      const BenchReport report = run_benchmark(cfg);
      print_report(report, std::cout);
      write_report_json(report, cfg.out_dir / "report.json");
      std::cout << "report written to " << (cfg.out_dir / "report.json").string()
                << '\n';
      return 0;
    }
    if (*export_cmd) {
      const CorpusEntry* entry = find_entry(function_name);
      if (!entry) {
        std::cerr << "unknown corpus function: " << function_name << '\n';
        return 1;
      }
      std::ifstream is(trace_path);
      if (!is) {
        std::cerr << "cannot open trace file: " << trace_path << '\n';
        return 1;
      }
      const Trace trace = Trace::from_jsonl(is);
      export_plot_data(trace, entry->f, entry->domain, export_dir);
      std::cout << "plot data written to " << export_dir << '\n';
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}
