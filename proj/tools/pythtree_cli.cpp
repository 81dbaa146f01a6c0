// pythtree: lay out hierarchies as generalized Pythagoras trees and relax
// them until no two rectangles overlap.
//
//   pythtree layout  --input tree.csv --format csv --out-svg tree.svg
//   pythtree resolve --input tree.json --format json --out-svg out.svg --stats it.csv --fit
//   pythtree scan    --path ./src --out-svg src.svg
//   pythtree bench   --sizes 100,1000,10000 --reps 5 --out bench.csv

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "pythtree/bench.hpp"
#include "pythtree/error.hpp"
#include "pythtree/hierarchy.hpp"
#include "pythtree/layout.hpp"
#include "pythtree/render.hpp"
#include "pythtree/solver.hpp"
#include "pythtree/stats.hpp"

namespace {

using namespace pythtree;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitIterationCap = 2;

struct LayoutFlags {
  double root_width = 1.0;
  HeightMode height_mode = HeightMode::kSquare;
  std::string out_svg;
};

struct SolverFlags {
  SolverConfig solver;
  double eps_rel = 1e-9;
  std::string stats_path;
  bool fit = false;
  bool timing = false;
};

struct InputFlags {
  std::string input;
  InputFormat format = InputFormat::kCsvEdges;
  WeightMode weights = WeightMode::kSubtree;
};

void add_input_flags(CLI::App* cmd, InputFlags& f) {
  cmd->add_option("--input", f.input, "Hierarchy file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--format", f.format, "Input format")
      ->required()
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, InputFormat>{{"csv", InputFormat::kCsvEdges},
                                             {"json", InputFormat::kJson}},
          CLI::ignore_case));
  cmd->add_option("--weights", f.weights, "Node weights: subtree sizes or explicit input weights")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, WeightMode>{{"subtree", WeightMode::kSubtree},
                                            {"explicit", WeightMode::kExplicit}},
          CLI::ignore_case));
}

void add_layout_flags(CLI::App* cmd, LayoutFlags& f) {
  cmd->add_option("--root-width", f.root_width, "Width of the root rectangle")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--height-mode", f.height_mode, "Rectangle height rule")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, HeightMode>{{"square", HeightMode::kSquare},
                                            {"limited", HeightMode::kLimited}},
          CLI::ignore_case));
  cmd->add_option("--out-svg", f.out_svg, "SVG output path")->required();
}

void add_solver_flags(CLI::App* cmd, SolverFlags& f) {
  cmd->add_option("--push", f.solver.push_factor, "Push force factor");
  cmd->add_option("--pull", f.solver.pull_factor, "Pull force factor");
  cmd->add_option("--b-cap", f.solver.b_cap, "Upper bound on b");
  cmd->add_option("--lr", f.solver.lr_init, "Initial learning rate");
  cmd->add_option("--lr-decay", f.solver.lr_decay, "Learning rate decay per iteration");
  cmd->add_option("--max-iter", f.solver.max_iterations, "Iteration cap");
  cmd->add_option("--eps-rel", f.eps_rel, "Touch tolerance relative to the root width");
  cmd->add_option("--stats", f.stats_path, "Per-iteration statistics CSV");
  cmd->add_flag("--fit", f.fit, "Print an exponential fit of collisions over iterations");
  cmd->add_flag("--timing", f.timing, "Record wall time in the statistics CSV");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error(fmt::format("cannot write {}", path));
}

Hierarchy read_input(const InputFlags& f) {
  std::ifstream in(f.input, std::ios::binary);
  if (!in) throw Error(ErrorCode::kPathNotFound, f.input);
  return assign_subtree_weights(load_hierarchy(in, f.format), f.weights);
}

LayoutConfig layout_config(const LayoutFlags& f) {
  return LayoutConfig{.root_width = f.root_width, .height_mode = f.height_mode};
}

int run_layout(const InputFlags& in, const LayoutFlags& lf) {
  const Hierarchy h = read_input(in);
  const TreeLayout layout = initial_layout(h, layout_config(lf));
  write_file(lf.out_svg, render_svg(layout, h));
  std::cout << fmt::format("rendered {} nodes to {}\n", h.size(), lf.out_svg);
  return kExitOk;
}

int run_solver(const Hierarchy& h, const LayoutFlags& lf, SolverFlags sf) {
  const LayoutConfig lc = layout_config(lf);
  sf.solver.eps = sf.eps_rel * lc.root_width;
  const SolveResult result = solve(h, lc, sf.solver);

  write_file(lf.out_svg, render_svg(result.layout, h));
  if (!sf.stats_path.empty()) {
    write_file(sf.stats_path, write_stats_csv(result.stats, {.include_wall_time = sf.timing}));
  }

  const int iterations = result.stats.back().iteration;
  if (result.status == SolveStatus::kResolved) {
    std::cout << fmt::format("resolved: {} nodes, {} initial collisions, {} iterations\n",
                             h.size(), result.stats.front().collisions, iterations);
  } else {
    std::cout << fmt::format("iteration cap: {} nodes, {} collisions left after {} iterations\n",
                             h.size(), result.collisions.size(), iterations);
  }
  if (sf.fit) {
    try {
      const ExponentialFit fit = fit_exponential(result.stats);
      std::cout << fmt::format("fit: A={:.6g} lambda={:.6g} r2={:.6f} points={}\n", fit.amplitude,
                               fit.lambda, fit.r_squared, fit.points);
    } catch (const Error& e) {
      std::cout << "fit: " << e.what() << '\n';
    }
  }
  return result.status == SolveStatus::kResolved ? kExitOk : kExitIterationCap;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    const auto value = std::stoull(item, &pos);
    if (pos != item.size() || value == 0) throw std::invalid_argument("bad size: " + item);
    sizes.push_back(value);
  }
  return sizes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Overlap-free generalized Pythagoras tree layouts"};
  app.require_subcommand(1);

  InputFlags input;
  LayoutFlags layout_flags;
  SolverFlags solver_flags;

  auto* layout_cmd = app.add_subcommand("layout", "Render the unrelaxed tree (b = 1 everywhere)");
  add_input_flags(layout_cmd, input);
  add_layout_flags(layout_cmd, layout_flags);

  auto* resolve_cmd = app.add_subcommand("resolve", "Relax the tree until nothing overlaps");
  add_input_flags(resolve_cmd, input);
  add_layout_flags(resolve_cmd, layout_flags);
  add_solver_flags(resolve_cmd, solver_flags);

  std::string scan_path;
  ScanOptions scan_options;
  auto* scan_cmd = app.add_subcommand("scan", "Resolve a directory tree weighted by file size");
  scan_cmd->add_option("--path", scan_path, "Directory to scan")->required();
  scan_cmd->add_flag("--follow-symlinks", scan_options.follow_symlinks, "Follow symbolic links");
  add_layout_flags(scan_cmd, layout_flags);
  add_solver_flags(scan_cmd, solver_flags);

  std::string sizes_text = "100,1000,10000";
  int reps = 5;
  std::string bench_out;
  auto* bench_cmd = app.add_subcommand("bench", "Time quadtree against all-pairs collision passes");
  bench_cmd->add_option("--sizes", sizes_text, "Comma-separated node counts");
  bench_cmd->add_option("--reps", reps, "Repetitions per size")->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--out", bench_out, "CSV report path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*layout_cmd) return run_layout(input, layout_flags);
    if (*resolve_cmd) return run_solver(read_input(input), layout_flags, solver_flags);
    if (*scan_cmd) {
      const ScanResult scan = scan_filesystem(scan_path, scan_options);
      for (const auto& w : scan.warnings) std::cerr << "warning: " << w << '\n';
      return run_solver(scan.hierarchy, layout_flags, solver_flags);
    }
    if (*bench_cmd) {
      const auto rows = bench_collision(parse_sizes(sizes_text), reps);
      const std::string report = bench_report_csv(rows);
      write_file(bench_out, report);
      std::cout << report;
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
