#pragma once

#include <cstdint>

#include "pythtree/hierarchy.hpp"

// Synthetic hierarchies for tests, benchmarks and the bench subcommand. All
// generators return subtree-size weights and are deterministic per seed.
namespace pythtree::generators {

/// Every internal node has `arity` children; levels 0..depth.
Hierarchy complete_tree(int arity, int depth);

/// Spine of `depth` internal nodes, each with the next spine node and one
/// extra leaf as children.
Hierarchy chain_with_siblings(int depth);

/// Root with `leaves` leaf children.
Hierarchy fan_out(int leaves);

/// T(d) has children T(d-2), T(d-1), T(d-2); T(0) is a leaf.
Hierarchy self_similar(int depth);

/// Random recursive tree: node i attaches to a uniformly chosen earlier node.
Hierarchy random_tree(std::size_t n, std::uint64_t seed);

}  // namespace pythtree::generators
