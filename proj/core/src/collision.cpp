#include "pythtree/collision.hpp"

#include <algorithm>

namespace pythtree {

QuadtreeIndex build_index(const TreeLayout& layout, QuadtreeIndex::Options options) {
  std::vector<Aabb> boxes;
  boxes.reserve(layout.nodes.size());
  for (const auto& node : layout.nodes) boxes.push_back(rect_aabb(node.rect));
  return QuadtreeIndex(boxes, options);
}

std::vector<NodeId> window_query(const QuadtreeIndex& index, const Aabb& box) {
  return index.window_query(box);
}

std::vector<CollisionPair> find_collisions(const TreeLayout& layout, const QuadtreeIndex& index,
                                           double eps) {
  std::vector<CollisionPair> pairs;
  std::vector<NodeId> candidates;
  const auto n = static_cast<NodeId>(layout.nodes.size());
  for (NodeId u = 0; u < n; ++u) {
    const OrientedRect& ru = layout.nodes[u].rect;
    candidates.clear();
    index.query(rect_aabb(ru), candidates);
    for (const NodeId v : candidates) {
      // Each unordered pair is seen from both ends; keep the u < v sighting.
      if (v <= u) continue;
      if (rects_overlap(ru, layout.nodes[v].rect, eps)) pairs.push_back({u, v});
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<CollisionPair> find_collisions_naive(const TreeLayout& layout, double eps) {
  std::vector<CollisionPair> pairs;
  const auto n = static_cast<NodeId>(layout.nodes.size());
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rects_overlap(layout.nodes[u].rect, layout.nodes[v].rect, eps)) pairs.push_back({u, v});
    }
  }
  return pairs;
}

}  // namespace pythtree
