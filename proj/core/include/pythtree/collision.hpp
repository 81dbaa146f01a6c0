#pragma once

#include <compare>
#include <vector>

#include "pythtree/layout.hpp"
#include "pythtree/quadtree.hpp"

namespace pythtree {

/// Unordered overlapping pair stored canonically with u < v.
struct CollisionPair {
  NodeId u;
  NodeId v;

  friend auto operator<=>(const CollisionPair&, const CollisionPair&) = default;
};

QuadtreeIndex build_index(const TreeLayout& layout,
                          QuadtreeIndex::Options options = QuadtreeIndex::Options{});

/// Sorted ids whose bounding boxes intersect `box`.
std::vector<NodeId> window_query(const QuadtreeIndex& index, const Aabb& box);

/// Window-queries every rectangle's bounding box, then confirms candidates
/// with the exact overlap test. Result sorted, no duplicates.
std::vector<CollisionPair> find_collisions(const TreeLayout& layout, const QuadtreeIndex& index,
                                           double eps);

/// All-pairs exact test. Reference for find_collisions.
std::vector<CollisionPair> find_collisions_naive(const TreeLayout& layout, double eps);

}  // namespace pythtree
