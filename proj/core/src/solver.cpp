#include "pythtree/solver.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "pythtree/error.hpp"

namespace pythtree {

void SolverConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::kDomainError, what);
  };
  require(push_factor > 1.0, "push factor must exceed 1");
  require(pull_factor > 0.0 && pull_factor < 1.0, "pull factor must lie in (0, 1)");
  require(b_cap >= 1.0, "b cap must be at least 1");
  require(lr_init >= 0.0 && lr_init < 1.0, "learning rate must lie in [0, 1)");
  require(lr_decay >= 0.0 && lr_decay <= 1.0, "learning rate decay must lie in [0, 1]");
  require(max_iterations >= 0, "iteration cap must be non-negative");
  require(eps >= 0.0, "touch tolerance must be non-negative");
}

NodeId lowest_common_ancestor(const Hierarchy& h, NodeId u, NodeId v) {
  while (h.node(u).depth > h.node(v).depth) u = *h.node(u).parent;
  while (h.node(v).depth > h.node(u).depth) v = *h.node(v).parent;
  while (u != v) {
    u = *h.node(u).parent;
    v = *h.node(v).parent;
  }
  return u;
}

void tally_counters(const Hierarchy& h, TreeLayout& layout, std::span<const CollisionPair> pairs) {
  for (const auto& [u, v] : pairs) {
    const NodeId z = lowest_common_ancestor(h, u, v);
    ++layout.nodes[z].spread;
    for (NodeId side : {u, v}) {
      for (NodeId x = side; x != z; x = *h.node(x).parent) ++layout.nodes[x].narrow;
    }
  }
}

void apply_forces(TreeLayout& layout, const SolverConfig& cfg) {
  for (auto& node : layout.nodes) {
    if (node.spread > node.narrow) {
      node.b = std::min(cfg.push_factor * node.b, cfg.b_cap);
    } else if (node.spread < node.narrow) {
      node.b = cfg.pull_factor * node.b;
    }
    node.b = node.b + (1.0 - node.b) * node.lr;
    node.lr = node.lr * cfg.lr_decay;
    node.spread = 0;
    node.narrow = 0;
  }
}

IterationStats measure(const TreeLayout& layout, int iteration, std::size_t collisions) {
  IterationStats s{.iteration = iteration, .collisions = collisions};
  if (!layout.nodes.empty()) {
    const auto [lo, hi] = std::minmax_element(
        layout.nodes.begin(), layout.nodes.end(),
        [](const NodeLayout& a, const NodeLayout& b) { return a.b < b.b; });
    s.min_b = lo->b;
    s.max_b = hi->b;
  }
  return s;
}

IterationStats step(const Hierarchy& h, TreeLayout& layout, std::vector<CollisionPair>& collisions,
                    const LayoutConfig& layout_cfg, const SolverConfig& cfg) {
  tally_counters(h, layout, collisions);
  apply_forces(layout, cfg);
  compute_rects(h, layout, layout_cfg);
  const QuadtreeIndex index = build_index(layout);
  collisions = find_collisions(layout, index, cfg.eps);
  return measure(layout, 0, collisions.size());
}

SolveResult solve(const Hierarchy& h, const LayoutConfig& layout_cfg, const SolverConfig& cfg,
                  const IterationObserver& observer) {
  cfg.validate();
  using Clock = std::chrono::steady_clock;

  auto start = Clock::now();
  SolveResult result;
  result.layout = initial_layout(h, layout_cfg);
  for (auto& node : result.layout.nodes) node.lr = cfg.lr_init;
  result.collisions = find_collisions(result.layout, build_index(result.layout), cfg.eps);

  IterationStats initial = measure(result.layout, 0, result.collisions.size());
  initial.wall_time = Clock::now() - start;
  result.stats.push_back(initial);
  if (observer) observer(result.layout, initial);

  int iteration = 0;
  while (!result.collisions.empty() && iteration < cfg.max_iterations) {
    start = Clock::now();
    IterationStats s = step(h, result.layout, result.collisions, layout_cfg, cfg);
    s.iteration = ++iteration;
    s.wall_time = Clock::now() - start;
    result.stats.push_back(s);
    if (observer) observer(result.layout, s);
  }
  result.status = result.collisions.empty() ? SolveStatus::kResolved : SolveStatus::kIterationCap;
  return result;
}

}  // namespace pythtree
