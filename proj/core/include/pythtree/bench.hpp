#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pythtree {

struct BenchRow {
  std::size_t n = 0;
  int repetition = 0;
  std::size_t pairs = 0;
  double quadtree_ms = 0.0;  // index build + one find_collisions pass
  double naive_ms = 0.0;     // one find_collisions_naive pass
  bool sets_equal = false;
};

struct BenchOptions {
  std::uint64_t seed = 7;
  double eps_rel = 1e-9;
};

/// Times one indexed and one all-pairs collision pass on the initial layout
/// of a random tree with n nodes, per size and repetition. Throws
/// std::logic_error if the two passes ever disagree.
std::vector<BenchRow> bench_collision(const std::vector<std::size_t>& sizes, int repetitions,
                                      BenchOptions options = {});

/// Header `n,rep,pairs,quadtree_ms,naive_ms,speedup,equal`.
std::string bench_report_csv(const std::vector<BenchRow>& rows);

}  // namespace pythtree
