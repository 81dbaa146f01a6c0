#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "pythtree/generators.hpp"
#include "pythtree/solver.hpp"
#include "support/oracles.hpp"

using namespace pythtree;

namespace {

// Preorder ids: 0 root; 1 {2, 3}; 4 {5, 6}.
Hierarchy seven() { return generators::complete_tree(2, 2); }

TreeLayout blank(const Hierarchy& h) {
  TreeLayout layout;
  layout.nodes.resize(h.size());
  return layout;
}

}  // namespace

TEST_CASE("lowest common ancestor") {
  const auto h = seven();
  CHECK(lowest_common_ancestor(h, 3, 3) == 3);
  CHECK(lowest_common_ancestor(h, 1, 4) == 0);
  CHECK(lowest_common_ancestor(h, 2, 3) == 1);
  CHECK(lowest_common_ancestor(h, 1, 3) == 1);
  CHECK(lowest_common_ancestor(h, 3, 1) == 1);
  CHECK(lowest_common_ancestor(h, 0, 6) == 0);
  CHECK(lowest_common_ancestor(h, 2, 6) == 0);

  const auto big = generators::random_tree(800, 3);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const auto u = static_cast<NodeId>(rng() % big.size());
    const auto v = static_cast<NodeId>(rng() % big.size());
    CHECK(lowest_common_ancestor(big, u, v) == oracle::lca_by_ancestor_set(big, u, v));
  }
}

TEST_CASE("tally: sibling pair") {
  const auto h = seven();
  auto layout = blank(h);
  const std::vector<CollisionPair> pairs{{1, 4}};
  tally_counters(h, layout, pairs);
  CHECK(layout.nodes[0].spread == 1);
  CHECK(layout.nodes[1].narrow == 1);
  CHECK(layout.nodes[4].narrow == 1);
  CHECK(layout.nodes[0].narrow == 0);
  CHECK(layout.nodes[1].spread == 0);
}

TEST_CASE("tally: ancestor and grandchild") {
  const auto h = seven();
  auto layout = blank(h);
  const std::vector<CollisionPair> pairs{{0, 6}};
  tally_counters(h, layout, pairs);
  CHECK(layout.nodes[0].spread == 1);
  CHECK(layout.nodes[0].narrow == 0);
  CHECK(layout.nodes[6].narrow == 1);
  CHECK(layout.nodes[4].narrow == 1);
  for (NodeId id : {1u, 2u, 3u, 5u}) CHECK(layout.nodes[id].narrow == 0);
}

TEST_CASE("tally matches per-pair accumulation and ignores pair order") {
  const auto h = seven();
  const std::vector<CollisionPair> pairs{{2, 5}, {2, 3}, {1, 6}};
  auto layout = blank(h);
  tally_counters(h, layout, pairs);
  const auto expected = oracle::accumulate_counters(h, pairs);
  for (NodeId id = 0; id < h.size(); ++id) {
    CHECK(layout.nodes[id].spread == expected.spread[id]);
    CHECK(layout.nodes[id].narrow == expected.narrow[id]);
  }
  // Hand check of the oracle for this case.
  CHECK(expected.spread == std::vector<int>{2, 1, 0, 0, 0, 0, 0});
  CHECK(expected.narrow == std::vector<int>{0, 2, 2, 1, 2, 1, 1});

  const auto big = generators::random_tree(300, 12);
  std::mt19937_64 rng(12);
  std::vector<CollisionPair> many;
  for (int i = 0; i < 400; ++i) {
    auto u = static_cast<NodeId>(rng() % big.size());
    auto v = static_cast<NodeId>(rng() % big.size());
    if (u == v) continue;
    many.push_back({std::min(u, v), std::max(u, v)});
  }
  auto a = blank(big);
  tally_counters(big, a, many);
  std::shuffle(many.begin(), many.end(), rng);
  auto b = blank(big);
  tally_counters(big, b, many);
  const auto ref = oracle::accumulate_counters(big, many);
  for (NodeId id = 0; id < big.size(); ++id) {
    CHECK(a.nodes[id].spread == b.nodes[id].spread);
    CHECK(a.nodes[id].narrow == b.nodes[id].narrow);
    CHECK(a.nodes[id].spread == ref.spread[id]);
    CHECK(a.nodes[id].narrow == ref.narrow[id]);
  }
}

TEST_CASE("force arithmetic") {
  const SolverConfig cfg;
  TreeLayout layout;
  layout.nodes.resize(3);
  layout.nodes[0] = {.b = 1.0, .lr = 0.1};
  layout.nodes[1] = {.b = 1.5, .lr = 0.0, .spread = 1, .narrow = 0};
  layout.nodes[2] = {.b = 1.0, .lr = 0.1, .spread = 0, .narrow = 1};
  apply_forces(layout, cfg);

  CHECK(layout.nodes[0].b == 1.0);
  CHECK(layout.nodes[0].lr == 0.1 * 0.9);
  CHECK(layout.nodes[1].b == 1.6180339887);
  CHECK(layout.nodes[1].lr == 0.0);
  CHECK(layout.nodes[2].b == 0.91);
  CHECK(layout.nodes[2].lr == 0.1 * 0.9);
  for (const auto& n : layout.nodes) {
    CHECK(n.spread == 0);
    CHECK(n.narrow == 0);
  }

  // Ties apply only the neutral force.
  TreeLayout tie;
  tie.nodes = {{.b = 0.5, .lr = 0.5, .spread = 2, .narrow = 2}};
  apply_forces(tie, cfg);
  CHECK(tie.nodes[0].b == 0.75);
}

TEST_CASE("solver config validation") {
  CHECK_NOTHROW(SolverConfig{}.validate());
  CHECK_THROWS(SolverConfig{.push_factor = 1.0}.validate());
  CHECK_THROWS(SolverConfig{.pull_factor = 1.0}.validate());
  CHECK_THROWS(SolverConfig{.b_cap = 0.9}.validate());
  CHECK_THROWS(SolverConfig{.lr_init = 1.0}.validate());
  CHECK_THROWS(SolverConfig{.eps = -1}.validate());
}

TEST_CASE("one step on a sibling overlap pushes the parent and pulls the siblings") {
  const auto h = generators::complete_tree(2, 1);
  auto layout = initial_layout(h, {});
  std::vector<CollisionPair> pairs{{1, 2}};
  const auto stats = step(h, layout, pairs, {}, SolverConfig{});
  CHECK(layout.nodes[0].b == 1.1 + (1.0 - 1.1) * 0.1);
  CHECK(layout.nodes[0].b > 1.0);
  CHECK(layout.nodes[1].b < 1.0);
  CHECK(layout.nodes[2].b < 1.0);
  CHECK(layout.nodes[1].b == 0.91);
  CHECK(stats.collisions == pairs.size());
  CHECK(pairs.empty());
  CHECK(stats.max_b == layout.nodes[0].b);
  CHECK(stats.min_b == 0.91);
}

TEST_CASE("solve trivial trees") {
  const auto solo = generators::complete_tree(2, 0);
  const auto r1 = solve(solo, {}, {});
  CHECK(r1.status == SolveStatus::kResolved);
  REQUIRE(r1.stats.size() == 1);
  CHECK(r1.stats[0].iteration == 0);
  CHECK(r1.stats[0].collisions == 0);

  const auto r2 = solve(generators::complete_tree(2, 1), {}, {});
  CHECK(r2.status == SolveStatus::kResolved);
  CHECK(r2.stats.size() == 1);
}

TEST_CASE("complete binary tree of depth 10 resolves") {
  const auto h = generators::complete_tree(2, 10);
  REQUIRE(h.size() == 2047);
  const SolverConfig cfg;
  std::size_t observed = 0;
  const auto result = solve(h, {}, cfg, [&](const TreeLayout& layout, const IterationStats& s) {
    CHECK(s.iteration == static_cast<int>(observed++));
    for (const auto& n : layout.nodes) {
      CHECK(n.b > 0.0);
      CHECK(n.b <= cfg.b_cap);
    }
  });
  CHECK(result.status == SolveStatus::kResolved);
  CHECK(result.stats.front().collisions > 0);
  CHECK(result.stats.back().collisions == 0);
  CHECK(observed == result.stats.size());
  CHECK(find_collisions_naive(result.layout, cfg.eps).empty());
  // Regression value from the first verified build.
  CHECK(result.stats.back().iteration == 27);
}

TEST_CASE("iteration cap is reported, not thrown") {
  const auto h = generators::complete_tree(2, 8);
  const auto result = solve(h, {}, {.max_iterations = 2});
  CHECK(result.status == SolveStatus::kIterationCap);
  CHECK(result.stats.size() == 3);
  CHECK_FALSE(result.collisions.empty());
  CHECK(result.collisions.size() == result.stats.back().collisions);
}

TEST_CASE("solver matches a straight-line reference loop") {
  const auto h = generators::random_tree(1000, 77);
  const SolverConfig cfg;
  const auto result = solve(h, {}, cfg);
  const auto ref = oracle::reference_relaxation(h, {}, cfg.eps, cfg.max_iterations);
  std::vector<std::size_t> counts;
  for (const auto& s : result.stats) counts.push_back(s.collisions);
  CHECK(counts == ref.collision_counts);
  CHECK(counts.front() > 0);
  for (std::size_t i = 0; i < h.size(); ++i) CHECK(result.layout.nodes[i].b == ref.final_b[i]);
}

TEST_CASE("solve is deterministic and follows the lr schedule") {
  const auto h = generators::random_tree(700, 5);
  const SolverConfig cfg;
  std::vector<std::vector<double>> lrs;
  const auto a = solve(h, {.height_mode = HeightMode::kLimited}, cfg,
                       [&](const TreeLayout& layout, const IterationStats& s) {
                         const double expected = cfg.lr_init * std::pow(cfg.lr_decay, s.iteration);
                         for (const auto& n : layout.nodes) {
                           CHECK(std::abs(n.lr - expected) <= 1e-12 * expected);
                         }
                       });
  const auto b = solve(h, {.height_mode = HeightMode::kLimited}, cfg);
  REQUIRE(a.stats.size() == b.stats.size());
  for (std::size_t i = 0; i < a.stats.size(); ++i) {
    CHECK(a.stats[i].collisions == b.stats[i].collisions);
    CHECK(a.stats[i].max_b == b.stats[i].max_b);
    CHECK(a.stats[i].min_b == b.stats[i].min_b);
  }
  for (std::size_t i = 0; i < h.size(); ++i) CHECK(a.layout.nodes[i].b == b.layout.nodes[i].b);
  CHECK(a.status == SolveStatus::kResolved);
}
