#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "pythtree/hierarchy.hpp"
#include "pythtree/layout.hpp"

namespace pythtree {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

struct RenderConfig {
  double padding = 0.05;  // scene units around the layout's bounding box
  Rgb color_start{8, 48, 107};     // root
  Rgb color_end{198, 219, 239};    // deepest level
  double stroke_width = 0.0;       // 0 disables outlines
  Rgb stroke{255, 255, 255};
  std::optional<Rgb> background;
  double pixel_width = 1024.0;
};

/// Linear gradient from color_start (depth 0) to color_end (max_depth).
Rgb depth_color(int depth, int max_depth, const RenderConfig& cfg);

/// One polygon per node in breadth-first order, y axis flipped so the tree
/// grows upward. Coordinates use fixed 6-decimal formatting.
std::string render_svg(const TreeLayout& layout, const Hierarchy& h, const RenderConfig& cfg = {});

/// Bounding box of every rectangle in the layout.
Aabb layout_bounds(const TreeLayout& layout);

}  // namespace pythtree
