#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pythtree/geometry.hpp"
#include "pythtree/hierarchy.hpp"

namespace pythtree {

/// Region quadtree over axis-aligned boxes. A box lives in the deepest cell
/// that fully contains it, so boxes straddling a split stay at the internal
/// node. Leaves split once they exceed `bucket_capacity` entries, unless the
/// cell is already at `max_depth`.
class QuadtreeIndex {
 public:
  struct Options {
    std::size_t bucket_capacity = 8;
    int max_depth = 16;
  };

  struct Entry {
    NodeId id;
    Aabb box;
  };

  QuadtreeIndex() : QuadtreeIndex(std::span<const Aabb>{}) {}
  explicit QuadtreeIndex(std::span<const Aabb> boxes) : QuadtreeIndex(boxes, Options{}) {}
  /// Box i is indexed under id i.
  QuadtreeIndex(std::span<const Aabb> boxes, Options options);

  /// Appends the ids of all boxes that intersect `box` (closed) to `out`, in
  /// no particular order.
  void query(const Aabb& box, std::vector<NodeId>& out) const;

  /// Sorted ids of all boxes intersecting `box`.
  std::vector<NodeId> window_query(const Aabb& box) const;

  const Aabb& region() const noexcept { return cells_.front().region; }
  std::size_t size() const noexcept { return size_; }
  /// Depth of the deepest cell (root cell = 0).
  int depth() const noexcept { return depth_; }
  std::size_t cell_count() const noexcept { return cells_.size(); }
  const Options& options() const noexcept { return options_; }

 private:
  static constexpr std::uint32_t kNoChildren = 0;

  struct Cell {
    Aabb region;
    int depth = 0;
    std::uint32_t first_child = kNoChildren;  // four consecutive cells
    std::vector<Entry> entries;
  };

  void insert(const Entry& entry);
  void split(std::uint32_t cell);
  // Child quadrant of `cell` that fully contains `box`, or -1.
  int quadrant_for(const Cell& cell, const Aabb& box) const;

  Options options_;
  std::vector<Cell> cells_;
  std::size_t size_ = 0;
  int depth_ = 0;
};

}  // namespace pythtree
