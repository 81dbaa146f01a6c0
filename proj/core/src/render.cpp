#include "pythtree/render.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include <fmt/format.h>

namespace pythtree {
namespace {

std::uint8_t lerp_channel(std::uint8_t from, std::uint8_t to, double t) {
  const double v = std::round(from + (static_cast<double>(to) - from) * t);
  return static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
}

std::string hex(Rgb c) { return fmt::format("#{:02x}{:02x}{:02x}", c.r, c.g, c.b); }

// Fixed 6 decimals; "-0.000000" is folded into "0.000000".
void append_coord(std::string& out, double v) {
  const auto start = out.size();
  fmt::format_to(std::back_inserter(out), "{:.6f}", v);
  if (out.compare(start, std::string::npos, "-0.000000") == 0) out.erase(start, 1);
}

}  // namespace

Rgb depth_color(int depth, int max_depth, const RenderConfig& cfg) {
  const double t = static_cast<double>(depth) / std::max(1, max_depth);
  return {lerp_channel(cfg.color_start.r, cfg.color_end.r, t),
          lerp_channel(cfg.color_start.g, cfg.color_end.g, t),
          lerp_channel(cfg.color_start.b, cfg.color_end.b, t)};
}

Aabb layout_bounds(const TreeLayout& layout) {
  if (layout.nodes.empty()) return {};
  Aabb box = rect_aabb(layout.nodes.front().rect);
  for (const auto& node : layout.nodes) box = box.merged(rect_aabb(node.rect));
  return box;
}

std::string render_svg(const TreeLayout& layout, const Hierarchy& h, const RenderConfig& cfg) {
  const Aabb bounds = layout_bounds(layout);
  const double view_w = (bounds.max_x - bounds.min_x) + 2.0 * cfg.padding;
  const double view_h = (bounds.max_y - bounds.min_y) + 2.0 * cfg.padding;
  // Mirror y inside the same bounding box.
  const double flip = bounds.min_y + bounds.max_y;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
  append_coord(out, bounds.min_x - cfg.padding);
  out += ' ';
  append_coord(out, bounds.min_y - cfg.padding);
  out += ' ';
  append_coord(out, view_w);
  out += ' ';
  append_coord(out, view_h);
  out += "\" width=\"";
  append_coord(out, cfg.pixel_width);
  out += "\" height=\"";
  append_coord(out, view_w > 0.0 ? cfg.pixel_width * view_h / view_w : cfg.pixel_width);
  out += "\">\n";

  if (cfg.background) {
    out += "<rect x=\"";
    append_coord(out, bounds.min_x - cfg.padding);
    out += "\" y=\"";
    append_coord(out, bounds.min_y - cfg.padding);
    out += "\" width=\"";
    append_coord(out, view_w);
    out += "\" height=\"";
    append_coord(out, view_h);
    out += "\" fill=\"" + hex(*cfg.background) + "\"/>\n";
  }

  out += "<g";
  if (cfg.stroke_width > 0.0) {
    out += " stroke=\"" + hex(cfg.stroke) + "\" stroke-width=\"";
    append_coord(out, cfg.stroke_width);
    out += "\" stroke-linejoin=\"round\"";
  }
  out += ">\n";

  for (const NodeId id : h.bfs_order()) {
    const auto corners = layout.nodes[id].rect.corners();
    out += "<polygon points=\"";
    for (std::size_t i = 0; i < corners.size(); ++i) {
      if (i > 0) out += ' ';
      append_coord(out, corners[i].x);
      out += ',';
      append_coord(out, flip - corners[i].y);
    }
    out += "\" fill=\"" + hex(depth_color(h.node(id).depth, h.max_depth(), cfg)) + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace pythtree
