#include "pythtree/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "pythtree/error.hpp"

namespace pythtree {

std::array<Point, 4> OrientedRect::corners() const {
  const Vec2 along = width * base_dir;
  const Vec2 up = height * up_dir();
  return {origin, origin + along, origin + along + up, origin + up};
}

Aabb Aabb::merged(const Aabb& o) const {
  return {std::min(min_x, o.min_x), std::min(min_y, o.min_y), std::max(max_x, o.max_x),
          std::max(max_y, o.max_y)};
}

Vec2 unit_at_degrees(double theta) {
  if (theta == 0.0) return {1.0, 0.0};
  if (theta == 90.0) return {0.0, 1.0};
  if (theta == 180.0) return {-1.0, 0.0};
  const double rad = theta * (std::numbers::pi / 180.0);
  return {std::cos(rad), std::sin(rad)};
}

Point ellipse_point(const EllipseArc& e, double theta) {
  if (!(theta >= 0.0 && theta <= 180.0)) {
    throw Error(ErrorCode::kDomainError, fmt::format("angle {} outside [0, 180]", theta));
  }
  const Vec2 cs = unit_at_degrees(theta);
  return e.center + (e.a * cs.x) * e.u_axis + (e.b_ratio * e.a * cs.y) * e.v_axis();
}

namespace {

// Chord lengths depend only on b_ratio, so work on the canonical ellipse
// (center 0, u = x axis, a = 1).
double canonical_chord(double b_ratio, double from, double to) {
  const Vec2 p = unit_at_degrees(from);
  const Vec2 q = unit_at_degrees(to);
  return std::hypot(p.x - q.x, b_ratio * (p.y - q.y));
}

void fill_boundaries(std::span<const double> spans, std::vector<double>& boundaries) {
  const std::size_t k = spans.size();
  boundaries.assign(k + 1, 0.0);
  boundaries[0] = 180.0;
  double angle = 180.0;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    angle -= spans[i];
    boundaries[i + 1] = angle;
  }
  boundaries[k] = 0.0;
}

}  // namespace

AngleLayout rescale_angles(std::span<const double> weights, const EllipseArc& e, double tol,
                           int max_iter) {
  const std::size_t k = weights.size();
  if (k == 0) throw Error(ErrorCode::kDomainError, "rescale_angles needs at least one weight");
  double weight_sum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw Error(ErrorCode::kDomainError, "weights must be positive");
    weight_sum += w;
  }

  AngleLayout best;
  best.max_relative_error = std::numeric_limits<double>::infinity();
  if (k == 1) {
    best.boundaries = {180.0, 0.0};
    best.converged = true;
    best.max_relative_error = 0.0;
    return best;
  }

  std::vector<double> spans(k);
  std::vector<double> shares(k);
  for (std::size_t i = 0; i < k; ++i) {
    shares[i] = weights[i] / weight_sum;
    spans[i] = 180.0 * shares[i];
  }

  std::vector<double> boundaries;
  std::vector<double> chords(k);
  for (int sweep = 0;; ++sweep) {
    fill_boundaries(spans, boundaries);
    double chord_sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      chords[i] = canonical_chord(e.b_ratio, boundaries[i], boundaries[i + 1]);
      chord_sum += chords[i];
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      worst = std::max(worst, std::abs(chords[i] / chord_sum - shares[i]) / shares[i]);
    }
    const bool strictly_decreasing =
        std::adjacent_find(boundaries.begin(), boundaries.end(), std::less_equal<>()) ==
        boundaries.end();
    if (strictly_decreasing && worst < best.max_relative_error) {
      best.boundaries = boundaries;
      best.max_relative_error = worst;
      best.sweeps = sweep;
    }
    if (worst <= tol) {
      best.converged = true;
      return best;
    }
    if (sweep >= max_iter) break;

    double span_sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double chord_share = std::max(chords[i] / chord_sum, 1e-300);
      spans[i] *= shares[i] / chord_share;
      span_sum += spans[i];
    }
    for (double& s : spans) s *= 180.0 / span_sum;
  }

  if (best.boundaries.empty()) {
    // Only reachable if every sweep collapsed a span to rounding noise.
    fill_boundaries(std::vector<double>(k, 180.0 / static_cast<double>(k)), best.boundaries);
  }
  return best;
}

OrientedRect chord_rect(const EllipseArc& e, double theta_left, double theta_right, double height) {
  if (!(theta_left <= 180.0 && theta_left > theta_right && theta_right >= 0.0)) {
    throw Error(ErrorCode::kDomainError,
                fmt::format("chord angles ({}, {}) not ordered within [0, 180]", theta_left,
                            theta_right));
  }
  const Point left = ellipse_point(e, theta_left);
  const Point right = ellipse_point(e, theta_right);
  const Vec2 along = right - left;
  const double width = length(along);
  if (width < 1e-12 * e.a) {
    throw Error(ErrorCode::kDegenerateChord,
                fmt::format("chord ({}, {}) has length {}", theta_left, theta_right, width));
  }
  return OrientedRect{left, (1.0 / width) * along, width, height};
}

namespace {

struct Interval {
  double lo;
  double hi;
};

Interval project(const std::array<Point, 4>& corners, Vec2 axis) {
  Interval iv{dot(corners[0], axis), dot(corners[0], axis)};
  for (std::size_t i = 1; i < 4; ++i) {
    const double p = dot(corners[i], axis);
    iv.lo = std::min(iv.lo, p);
    iv.hi = std::max(iv.hi, p);
  }
  return iv;
}

}  // namespace

bool rects_overlap(const OrientedRect& r1, const OrientedRect& r2, double eps) {
  const auto shrink = [eps](const OrientedRect& r) {
    return OrientedRect{r.origin + eps * r.base_dir + eps * r.up_dir(), r.base_dir,
                        r.width - 2.0 * eps, r.height - 2.0 * eps};
  };
  const OrientedRect s1 = shrink(r1);
  const OrientedRect s2 = shrink(r2);
  if (s1.width <= 0.0 || s1.height <= 0.0 || s2.width <= 0.0 || s2.height <= 0.0) return false;

  const auto c1 = s1.corners();
  const auto c2 = s2.corners();
  const std::array<Vec2, 4> axes{s1.base_dir, s1.up_dir(), s2.base_dir, s2.up_dir()};
  for (const Vec2& axis : axes) {
    const Interval a = project(c1, axis);
    const Interval b = project(c2, axis);
    if (a.hi <= b.lo || b.hi <= a.lo) return false;
  }
  return true;
}

Aabb rect_aabb(const OrientedRect& r) {
  const auto c = r.corners();
  Aabb box{c[0].x, c[0].y, c[0].x, c[0].y};
  for (std::size_t i = 1; i < 4; ++i) {
    box.min_x = std::min(box.min_x, c[i].x);
    box.min_y = std::min(box.min_y, c[i].y);
    box.max_x = std::max(box.max_x, c[i].x);
    box.max_y = std::max(box.max_y, c[i].y);
  }
  return box;
}

}  // namespace pythtree
