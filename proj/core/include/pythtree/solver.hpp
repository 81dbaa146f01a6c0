#pragma once

#include <chrono>
#include <functional>
#include <span>
#include <vector>

#include "pythtree/collision.hpp"
#include "pythtree/hierarchy.hpp"
#include "pythtree/layout.hpp"

namespace pythtree {

struct SolverConfig {
  double push_factor = 1.1;
  double pull_factor = 0.9;
  double b_cap = 1.6180339887;  // golden ratio, as published to 10 decimals
  double lr_init = 0.1;
  double lr_decay = 0.9;
  int max_iterations = 10000;
  double eps = 1e-9;  // absolute touch tolerance, scene units

  /// Throws Error(kDomainError) when a field is out of range.
  void validate() const;
};

struct IterationStats {
  int iteration = 0;
  std::size_t collisions = 0;
  double max_b = 1.0;
  double min_b = 1.0;
  std::chrono::duration<double, std::milli> wall_time{0.0};
};

enum class SolveStatus { kResolved, kIterationCap };

struct SolveResult {
  TreeLayout layout;
  std::vector<IterationStats> stats;  // stats[0] is the initial layout
  std::vector<CollisionPair> collisions;  // remaining, empty when resolved
  SolveStatus status = SolveStatus::kResolved;
};

/// Deepest node that is an ancestor-or-self of both u and v.
NodeId lowest_common_ancestor(const Hierarchy& h, NodeId u, NodeId v);

/// For each pair: spread += 1 on the LCA, narrow += 1 on every node of the
/// paths u..LCA and v..LCA excluding the LCA itself.
void tally_counters(const Hierarchy& h, TreeLayout& layout, std::span<const CollisionPair> pairs);

/// Push, pull and neutral force on every node's b, then decays lr and clears
/// the counters.
void apply_forces(TreeLayout& layout, const SolverConfig& cfg);

/// One relaxation iteration: tally, forces, relayout, fresh collision pass.
/// `collisions` holds the current pairs on entry and the new pairs on exit.
IterationStats step(const Hierarchy& h, TreeLayout& layout, std::vector<CollisionPair>& collisions,
                    const LayoutConfig& layout_cfg, const SolverConfig& cfg);

/// Called after every iteration (and once for the initial layout).
using IterationObserver = std::function<void(const TreeLayout&, const IterationStats&)>;

SolveResult solve(const Hierarchy& h, const LayoutConfig& layout_cfg, const SolverConfig& cfg,
                  const IterationObserver& observer = {});

IterationStats measure(const TreeLayout& layout, int iteration, std::size_t collisions);

}  // namespace pythtree
