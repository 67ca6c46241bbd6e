#pragma once

// Weighted y-on-x least squares with datum multiplicities, centric
// coordinates and the pivot-point formulas.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pivotlab {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// 1-based stable identifier of a point inside a PointSet.
struct Label {
  std::size_t value = 1;

  constexpr std::size_t index() const noexcept { return value - 1; }
  friend auto operator<=>(const Label&, const Label&) = default;
};

/// Displacement (chi, gamma) of a point from an anchor point.
struct CentricPoint {
  double chi = 0.0;
  double gamma = 0.0;

  friend bool operator==(const CentricPoint&, const CentricPoint&) = default;
};

/// Ordered planar points labelled 1..n. Rejects n < 2, non-finite
/// coordinates and sets whose abscissae all coincide.
class PointSet {
 public:
  explicit PointSet(std::vector<Point> points);

  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& operator[](std::size_t index) const { return points_[index]; }

  /// Throws LabelError when the label is outside 1..n.
  const Point& at(Label label) const;
  void check(Label label) const;

  std::vector<Label> labels() const;

  /// Largest absolute coordinate; the length unit used by tolerances.
  double scale() const noexcept;

 private:
  std::vector<Point> points_;
};

/// Per-point total counts delta_j = k_j + 1 (k_j repetitions, delta_j >= 1).
class Multiplicities {
 public:
  explicit Multiplicities(std::vector<std::uint64_t> delta);

  static Multiplicities ones(std::size_t n);
  static Multiplicities from_repetitions(std::span<const std::uint64_t> k);

  std::size_t size() const noexcept { return delta_.size(); }
  std::uint64_t operator[](std::size_t index) const { return delta_[index]; }
  const std::vector<std::uint64_t>& values() const noexcept { return delta_; }
  std::uint64_t total() const noexcept;

  friend bool operator==(const Multiplicities&, const Multiplicities&) = default;

 private:
  std::vector<std::uint64_t> delta_;
};

struct RegressionLine {
  double m = 0.0;    // slope
  double b = 0.0;    // intercept
  double sse = 0.0;  // weighted sum of squared vertical residuals

  double operator()(double x) const noexcept { return m * x + b; }
};

/// Either a finite pivot or "pivoting at infinity" (vanishing denominator).
class PivotResult {
 public:
  static PivotResult finite(Point p) { return PivotResult(p); }
  static PivotResult at_infinity() { return PivotResult(); }

  bool is_finite() const noexcept { return point_.has_value(); }
  bool is_at_infinity() const noexcept { return !point_.has_value(); }
  /// Precondition: is_finite().
  const Point& point() const { return *point_; }

  friend bool operator==(const PivotResult&, const PivotResult&) = default;

 private:
  PivotResult() = default;
  explicit PivotResult(Point p) : point_(p) {}

  std::optional<Point> point_;
};

std::vector<CentricPoint> centric_transform(const PointSet& s, Label anchor);

/// Minimises sum_j delta_j (m x_j + b - y_j)^2. Throws ShapeError on a length
/// mismatch and DegenerateXError when the weighted x-variance vanishes.
RegressionLine fit_weighted_line(const PointSet& s, const Multiplicities& d);
RegressionLine fit_line(const PointSet& s);

/// Pivot of label i with every point counted once.
PivotResult pivot_point(const PointSet& s, Label i);

/// Pivot of label i under multiplicities d:
///   x_i + sum d_j chi_j^2 / sum d_j chi_j,  y_i + sum d_j chi_j gamma_j / sum d_j chi_j
/// AtInfinity when |sum d_j chi_j| <= 1e-12 * max|chi_j| * sum d_j.
PivotResult pivot_point_weighted(const PointSet& s, Label i, const Multiplicities& d);

/// Affine map sending chi2 -> -1 and chi3 -> +1.
/// Throws DegenerateIntervalError when chi2 == chi3.
double transform_T(double chi, double chi2, double chi3);

/// Perpendicular distance from p to the line y = m x + b.
double line_distance(const RegressionLine& line, Point p) noexcept;

}  // namespace pivotlab
