#include <algorithm>
#include <cmath>
#include <limits>

#include "pivotlab/errors.hpp"
#include "pivotlab/regions.hpp"

namespace pivotlab {

namespace {

double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double segment_distance(const Point& a, const Point& b, const Point& p) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return distance(a, p);
  const double t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
  return distance({a.x + t * dx, a.y + t * dy}, p);
}

}  // namespace

double ConvexHull::diameter() const noexcept {
  double d = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      d = std::max(d, distance(vertices_[i], vertices_[j]));
    }
  }
  return d;
}

ConvexHull convex_hull(std::span<const Point> points) {
  if (points.size() < 2) {
    throw ShapeError("convex hull needs at least 2 points");
  }
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return ConvexHull(pts);

  // Andrew's monotone chain; "<= 0" drops collinear vertices.
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return ConvexHull(std::move(hull));
}

Containment point_in_hull(const ConvexHull& h, Point p, double tol) {
  const auto& v = h.vertices();
  if (v.empty()) return Containment::Outside;

  double diameter = h.diameter();
  if (diameter == 0.0) diameter = std::max({1.0, std::abs(v[0].x), std::abs(v[0].y)});
  const double band = tol * diameter;

  if (v.size() == 1) {
    return distance(v[0], p) <= band ? Containment::OnBoundary : Containment::Outside;
  }
  if (v.size() == 2) {
    // A segment has no interior.
    return segment_distance(v[0], v[1], p) <= band ? Containment::OnBoundary
                                                   : Containment::Outside;
  }

  // Signed distance to each edge line; positive means the interior side.
  double min_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    min_distance = std::min(min_distance, cross(a, b, p) / distance(a, b));
  }
  if (min_distance < -band) return Containment::Outside;
  if (min_distance <= band) return Containment::OnBoundary;
  return Containment::Inside;
}

}  // namespace pivotlab
