#pragma once

#include <vector>

#include "pythtree/geometry.hpp"
#include "pythtree/hierarchy.hpp"

namespace pythtree {

enum class HeightMode {
  kSquare,   // height = width
  kLimited,  // height = min(original_height, width)
};

struct LayoutConfig {
  double root_width = 1.0;
  HeightMode height_mode = HeightMode::kSquare;
  double rescale_tol = kDefaultRescaleTol;
  int rescale_max_iter = kDefaultRescaleMaxIter;
};

struct NodeLayout {
  OrientedRect rect;
  double b = 1.0;     // ellipse ratio over this node's top edge
  double lr = 0.1;    // neutral-force learning rate
  int spread = 0;
  int narrow = 0;
  double original_height = 0.0;  // height in the initial b = 1 layout
};

struct TreeLayout {
  std::vector<NodeLayout> nodes;  // indexed by NodeId
  int max_depth = 0;
  // Internal nodes whose angle rescaling hit the sweep cap during the last
  // compute_rects; their children use the best sweep found.
  int unconverged_rescales = 0;
};

double node_height(HeightMode mode, double width, double original_height);

/// Classic generalized Pythagoras tree: b = 1 and lr = 0.1 everywhere.
TreeLayout initial_layout(const Hierarchy& h, const LayoutConfig& cfg);

/// Recomputes every rectangle top-down from the root, keeping each node's b,
/// lr, counters and original_height.
void compute_rects(const Hierarchy& h, TreeLayout& layout, const LayoutConfig& cfg);

/// Top edge ellipse of an internal node.
EllipseArc node_ellipse(const NodeLayout& node);

}  // namespace pythtree
