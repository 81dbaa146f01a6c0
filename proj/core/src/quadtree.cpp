#include "pythtree/quadtree.hpp"

#include <algorithm>

namespace pythtree {

QuadtreeIndex::QuadtreeIndex(std::span<const Aabb> boxes, Options options) : options_(options) {
  Aabb region{};
  if (!boxes.empty()) {
    region = boxes.front();
    for (const Aabb& b : boxes.subspan(1)) region = region.merged(b);
  }
  cells_.push_back(Cell{.region = region});
  for (std::size_t i = 0; i < boxes.size(); ++i) insert({static_cast<NodeId>(i), boxes[i]});
}

int QuadtreeIndex::quadrant_for(const Cell& cell, const Aabb& box) const {
  const double mid_x = 0.5 * (cell.region.min_x + cell.region.max_x);
  const double mid_y = 0.5 * (cell.region.min_y + cell.region.max_y);
  int quadrant = 0;
  if (box.min_x >= mid_x) {
    quadrant |= 1;
  } else if (box.max_x > mid_x) {
    return -1;
  }
  if (box.min_y >= mid_y) {
    quadrant |= 2;
  } else if (box.max_y > mid_y) {
    return -1;
  }
  return quadrant;
}

void QuadtreeIndex::split(std::uint32_t index) {
  const Aabb r = cells_[index].region;
  const int child_depth = cells_[index].depth + 1;
  const double mid_x = 0.5 * (r.min_x + r.max_x);
  const double mid_y = 0.5 * (r.min_y + r.max_y);
  const auto first = static_cast<std::uint32_t>(cells_.size());
  cells_.push_back(Cell{.region = {r.min_x, r.min_y, mid_x, mid_y}, .depth = child_depth});
  cells_.push_back(Cell{.region = {mid_x, r.min_y, r.max_x, mid_y}, .depth = child_depth});
  cells_.push_back(Cell{.region = {r.min_x, mid_y, mid_x, r.max_y}, .depth = child_depth});
  cells_.push_back(Cell{.region = {mid_x, mid_y, r.max_x, r.max_y}, .depth = child_depth});
  depth_ = std::max(depth_, child_depth);

  Cell& cell = cells_[index];
  cell.first_child = first;
  std::vector<Entry> kept;
  for (const Entry& e : cell.entries) {
    const int q = quadrant_for(cells_[index], e.box);
    if (q < 0) {
      kept.push_back(e);
    } else {
      cells_[first + static_cast<std::uint32_t>(q)].entries.push_back(e);
    }
  }
  cells_[index].entries = std::move(kept);

  for (std::uint32_t c = first; c < first + 4; ++c) {
    if (cells_[c].entries.size() > options_.bucket_capacity && child_depth < options_.max_depth) {
      split(c);
    }
  }
}

void QuadtreeIndex::insert(const Entry& entry) {
  ++size_;
  std::uint32_t index = 0;
  for (;;) {
    Cell& cell = cells_[index];
    if (cell.first_child == kNoChildren) {
      cell.entries.push_back(entry);
      if (cell.entries.size() > options_.bucket_capacity && cell.depth < options_.max_depth) {
        split(index);
      }
      return;
    }
    const int q = quadrant_for(cell, entry.box);
    if (q < 0) {
      cell.entries.push_back(entry);
      return;
    }
    index = cell.first_child + static_cast<std::uint32_t>(q);
  }
}

void QuadtreeIndex::query(const Aabb& box, std::vector<NodeId>& out) const {
  if (size_ == 0) return;
  std::vector<std::uint32_t> stack{0};
  while (!stack.empty()) {
    const Cell& cell = cells_[stack.back()];
    stack.pop_back();
    if (!cell.region.intersects(box)) continue;
    for (const Entry& e : cell.entries) {
      if (e.box.intersects(box)) out.push_back(e.id);
    }
    if (cell.first_child != kNoChildren) {
      for (std::uint32_t c = 0; c < 4; ++c) stack.push_back(cell.first_child + c);
    }
  }
}

std::vector<NodeId> QuadtreeIndex::window_query(const Aabb& box) const {
  std::vector<NodeId> out;
  query(box, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pythtree
