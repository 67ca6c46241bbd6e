#include "pivotlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pivotlab/errors.hpp"

namespace pivotlab {

namespace {

constexpr double kInfinityTolerance = 1e-12;

void require_same_length(const PointSet& s, const Multiplicities& d) {
  if (s.size() != d.size()) {
    throw ShapeError("multiplicities have " + std::to_string(d.size()) +
                     " entries for " + std::to_string(s.size()) + " points");
  }
}

// Shared by the unweighted and weighted entry points so that unit weights
// reproduce the unweighted pivot bit for bit (1.0 * v is exact).
template <typename WeightOf>
PivotResult pivot_impl(const PointSet& s, Label i, WeightOf weight) {
  const Point& anchor = s.at(i);
  double denominator = 0.0;
  double chi_moment = 0.0;
  double cross_moment = 0.0;
  double total_weight = 0.0;
  double max_chi = 0.0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const double w = weight(j);
    const double chi = s[j].x - anchor.x;
    const double gamma = s[j].y - anchor.y;
    denominator += w * chi;
    chi_moment += w * chi * chi;
    cross_moment += w * chi * gamma;
    total_weight += w;
    max_chi = std::max(max_chi, std::abs(chi));
  }
  if (std::abs(denominator) <= kInfinityTolerance * max_chi * total_weight) {
    return PivotResult::at_infinity();
  }
  return PivotResult::finite(
      {anchor.x + chi_moment / denominator, anchor.y + cross_moment / denominator});
}

}  // namespace

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw ShapeError("a point set needs at least 2 points, got " +
                     std::to_string(points_.size()));
  }
  for (std::size_t j = 0; j < points_.size(); ++j) {
    if (!std::isfinite(points_[j].x) || !std::isfinite(points_[j].y)) {
      throw ShapeError("point " + std::to_string(j + 1) + " has a non-finite coordinate");
    }
  }
  const bool all_same_x =
      std::all_of(points_.begin(), points_.end(),
                  [&](const Point& p) { return p.x == points_.front().x; });
  if (all_same_x) {
    throw DegenerateXError("all points share the abscissa x = " +
                           std::to_string(points_.front().x));
  }
}

const Point& PointSet::at(Label label) const {
  check(label);
  return points_[label.index()];
}

void PointSet::check(Label label) const {
  if (label.value < 1 || label.value > points_.size()) {
    throw LabelError("label " + std::to_string(label.value) + " is outside 1.." +
                     std::to_string(points_.size()));
  }
}

std::vector<Label> PointSet::labels() const {
  std::vector<Label> out;
  out.reserve(points_.size());
  for (std::size_t j = 1; j <= points_.size(); ++j) out.push_back(Label{j});
  return out;
}

double PointSet::scale() const noexcept {
  double s = 0.0;
  for (const Point& p : points_) s = std::max({s, std::abs(p.x), std::abs(p.y)});
  return s;
}

Multiplicities::Multiplicities(std::vector<std::uint64_t> delta) : delta_(std::move(delta)) {
  for (std::size_t j = 0; j < delta_.size(); ++j) {
    if (delta_[j] < 1) {
      throw ShapeError("multiplicity of point " + std::to_string(j + 1) +
                       " must be at least 1");
    }
  }
}

Multiplicities Multiplicities::ones(std::size_t n) {
  return Multiplicities(std::vector<std::uint64_t>(n, 1));
}

Multiplicities Multiplicities::from_repetitions(std::span<const std::uint64_t> k) {
  std::vector<std::uint64_t> delta(k.begin(), k.end());
  for (auto& v : delta) ++v;
  return Multiplicities(std::move(delta));
}

std::uint64_t Multiplicities::total() const noexcept {
  std::uint64_t t = 0;
  for (auto v : delta_) t += v;
  return t;
}

std::vector<CentricPoint> centric_transform(const PointSet& s, Label anchor) {
  const Point& origin = s.at(anchor);
  std::vector<CentricPoint> out;
  out.reserve(s.size());
  for (const Point& p : s.points()) out.push_back({p.x - origin.x, p.y - origin.y});
  return out;
}

RegressionLine fit_weighted_line(const PointSet& s, const Multiplicities& d) {
  require_same_length(s, d);

  // Centred two-pass form; the slope is insensitive to rounding in the means.
  double total = 0.0;
  double sum_x = 0.0;
  double sum_y = 0.0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const double w = static_cast<double>(d[j]);
    total += w;
    sum_x += w * s[j].x;
    sum_y += w * s[j].y;
  }
  const double mean_x = sum_x / total;
  const double mean_y = sum_y / total;

  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const double w = static_cast<double>(d[j]);
    const double dx = s[j].x - mean_x;
    sxx += w * dx * dx;
    sxy += w * dx * (s[j].y - mean_y);
  }
  const double scale = s.scale();
  if (!(sxx > 1e-28 * total * scale * scale)) {
    throw DegenerateXError("weighted x-variance vanishes");
  }

  RegressionLine line;
  line.m = sxy / sxx;
  line.b = mean_y - line.m * mean_x;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const double r = line(s[j].x) - s[j].y;
    line.sse += static_cast<double>(d[j]) * r * r;
  }
  return line;
}

RegressionLine fit_line(const PointSet& s) {
  return fit_weighted_line(s, Multiplicities::ones(s.size()));
}

PivotResult pivot_point(const PointSet& s, Label i) {
  return pivot_impl(s, i, [](std::size_t) { return 1.0; });
}

PivotResult pivot_point_weighted(const PointSet& s, Label i, const Multiplicities& d) {
  require_same_length(s, d);
  return pivot_impl(s, i, [&](std::size_t j) { return static_cast<double>(d[j]); });
}

double transform_T(double chi, double chi2, double chi3) {
  if (chi2 == chi3) {
    throw DegenerateIntervalError("transform_T needs chi2 != chi3");
  }
  const double mid = (chi2 + chi3) / 2.0;
  const double half_width = (chi3 - chi2) / 2.0;
  return (chi - mid) / half_width;
}

double line_distance(const RegressionLine& line, Point p) noexcept {
  return std::abs(line.m * p.x + line.b - p.y) / std::sqrt(1.0 + line.m * line.m);
}

}  // namespace pivotlab
