#include "pythtree/layout.hpp"

#include <algorithm>

#include "pythtree/error.hpp"

namespace pythtree {

double node_height(HeightMode mode, double width, double original_height) {
  return mode == HeightMode::kSquare ? width : std::min(original_height, width);
}

EllipseArc node_ellipse(const NodeLayout& node) {
  const OrientedRect& r = node.rect;
  const Point top_left = r.top_left();
  const Point top_right = top_left + r.width * r.base_dir;
  return EllipseArc{.center = 0.5 * (top_left + top_right),
                    .u_axis = r.base_dir,
                    .a = 0.5 * r.width,
                    .b_ratio = node.b};
}

void compute_rects(const Hierarchy& h, TreeLayout& layout, const LayoutConfig& cfg) {
  if (layout.nodes.size() != h.size()) {
    throw Error(ErrorCode::kMalformedInput, "layout does not match hierarchy");
  }
  layout.max_depth = h.max_depth();
  layout.unconverged_rescales = 0;

  NodeLayout& root = layout.nodes[h.root()];
  root.rect = OrientedRect{{0.0, 0.0}, {1.0, 0.0}, cfg.root_width,
                           node_height(cfg.height_mode, cfg.root_width, root.original_height)};

  std::vector<double> weights;
  for (const NodeId id : h.bfs_order()) {
    const auto& children = h.node(id).children;
    if (children.empty()) continue;

    weights.clear();
    for (const NodeId child : children) weights.push_back(h.node(child).weight);

    const EllipseArc arc = node_ellipse(layout.nodes[id]);
    const AngleLayout angles = rescale_angles(weights, arc, cfg.rescale_tol, cfg.rescale_max_iter);
    if (!angles.converged) ++layout.unconverged_rescales;

    for (std::size_t i = 0; i < children.size(); ++i) {
      NodeLayout& child = layout.nodes[children[i]];
      // Height depends on the chord width, so build with a placeholder first.
      child.rect = chord_rect(arc, angles.boundaries[i], angles.boundaries[i + 1], 1.0);
      child.rect.height = node_height(cfg.height_mode, child.rect.width, child.original_height);
    }
  }
}

TreeLayout initial_layout(const Hierarchy& h, const LayoutConfig& cfg) {
  TreeLayout layout;
  layout.nodes.resize(h.size());

  // original_height is the square height of the b = 1 tree, so the first pass
  // always runs in square mode.
  LayoutConfig square = cfg;
  square.height_mode = HeightMode::kSquare;
  compute_rects(h, layout, square);
  for (auto& node : layout.nodes) node.original_height = node.rect.height;

  if (cfg.height_mode != HeightMode::kSquare) compute_rects(h, layout, cfg);
  return layout;
}

}  // namespace pythtree
