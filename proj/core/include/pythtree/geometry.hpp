#pragma once

#include <array>
#include <cmath>
#include <span>
#include <vector>

namespace pythtree {

inline constexpr double kGoldenRatio = 1.6180339887498949;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

using Point = Vec2;

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double length(Vec2 v) { return std::hypot(v.x, v.y); }
constexpr Vec2 perp_ccw(Vec2 v) { return {-v.y, v.x}; }

/// Upper half of an ellipse standing on a parent's top edge. The perpendicular
/// semi-axis is b_ratio * a, measured outward (counterclockwise of u_axis).
struct EllipseArc {
  Point center;
  Vec2 u_axis{1.0, 0.0};
  double a = 1.0;
  double b_ratio = 1.0;

  Vec2 v_axis() const { return perp_ccw(u_axis); }
};

/// Rectangle standing on its bottom edge `origin -> origin + width*base_dir`;
/// the body lies counterclockwise of that edge.
struct OrientedRect {
  Point origin;
  Vec2 base_dir{1.0, 0.0};
  double width = 1.0;
  double height = 1.0;

  Vec2 up_dir() const { return perp_ccw(base_dir); }
  Point base_end() const { return origin + width * base_dir; }
  Point top_left() const { return origin + height * up_dir(); }

  /// Counterclockwise: bottom-left, bottom-right, top-right, top-left.
  std::array<Point, 4> corners() const;
};

struct Aabb {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;

  bool intersects(const Aabb& o) const {
    return min_x <= o.max_x && o.min_x <= max_x && min_y <= o.max_y && o.min_y <= max_y;
  }
  bool contains(const Aabb& o) const {
    return min_x <= o.min_x && o.max_x <= max_x && min_y <= o.min_y && o.max_y <= max_y;
  }
  Aabb merged(const Aabb& o) const;

  friend bool operator==(const Aabb&, const Aabb&) = default;
};

/// Boundary angles in degrees, strictly decreasing from 180 to 0.
struct AngleLayout {
  std::vector<double> boundaries;
  bool converged = false;
  int sweeps = 0;
  double max_relative_error = 0.0;
};

inline constexpr double kDefaultRescaleTol = 1e-6;
inline constexpr int kDefaultRescaleMaxIter = 100;

/// Exact at multiples of 90 degrees.
Vec2 unit_at_degrees(double theta);

Point ellipse_point(const EllipseArc& e, double theta);

/// Splits the half ellipse into chords whose lengths are proportional to
/// `weights`. Starts from angles proportional to the weights, then rescales
/// each angle by (weight share / chord share) until every share is within
/// `tol` relative. Returns the best sweep seen if `max_iter` runs out.
AngleLayout rescale_angles(std::span<const double> weights, const EllipseArc& e,
                           double tol = kDefaultRescaleTol,
                           int max_iter = kDefaultRescaleMaxIter);

OrientedRect chord_rect(const EllipseArc& e, double theta_left, double theta_right, double height);

/// True iff the interiors of both rectangles, each shrunk by eps on every
/// side, intersect. Touching edges and corners report false.
bool rects_overlap(const OrientedRect& r1, const OrientedRect& r2, double eps);

Aabb rect_aabb(const OrientedRect& r);

}  // namespace pythtree
