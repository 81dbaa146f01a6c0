#include "pythtree/bench.hpp"

#include <chrono>
#include <iterator>
#include <stdexcept>

#include <fmt/format.h>

#include "pythtree/collision.hpp"
#include "pythtree/generators.hpp"

namespace pythtree {

std::vector<BenchRow> bench_collision(const std::vector<std::size_t>& sizes, int repetitions,
                                      BenchOptions options) {
  using Clock = std::chrono::steady_clock;
  using Ms = std::chrono::duration<double, std::milli>;

  std::vector<BenchRow> rows;
  const LayoutConfig cfg;
  const double eps = options.eps_rel * cfg.root_width;
  for (const std::size_t n : sizes) {
    const Hierarchy h = generators::random_tree(n, options.seed + n);
    const TreeLayout layout = initial_layout(h, cfg);
    for (int rep = 0; rep < repetitions; ++rep) {
      BenchRow row{.n = n, .repetition = rep};

      auto t0 = Clock::now();
      const auto indexed = find_collisions(layout, build_index(layout), eps);
      row.quadtree_ms = Ms(Clock::now() - t0).count();

      t0 = Clock::now();
      const auto naive = find_collisions_naive(layout, eps);
      row.naive_ms = Ms(Clock::now() - t0).count();

      row.pairs = indexed.size();
      row.sets_equal = indexed == naive;
      if (!row.sets_equal) {
        throw std::logic_error(fmt::format("collision sets differ at n = {}", n));
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::string bench_report_csv(const std::vector<BenchRow>& rows) {
  std::string out = "n,rep,pairs,quadtree_ms,naive_ms,speedup,equal\n";
  for (const auto& r : rows) {
    const double speedup = r.quadtree_ms > 0.0 ? r.naive_ms / r.quadtree_ms : 0.0;
    fmt::format_to(std::back_inserter(out), "{},{},{},{:.3f},{:.3f},{:.2f},{}\n", r.n,
                   r.repetition, r.pairs, r.quadtree_ms, r.naive_ms, speedup,
                   r.sets_equal ? 1 : 0);
  }
  return out;
}

}  // namespace pythtree
