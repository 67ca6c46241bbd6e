#pragma once

// Barycentric sign regions, convex hulls, and exhaustive repetition sweeps
// that locate pivot points relative to the other data points.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pivotlab/geometry.hpp"

namespace pivotlab {

struct LabeledPoint {
  Label label;
  Point point;
};

/// Non-degenerate triangle; vertex order defines the order of lambda.
class Triangle {
 public:
  /// Throws DegenerateTriangleError when the vertices are collinear
  /// (|twice signed area| <= 1e-12 * diameter^2).
  Triangle(LabeledPoint v1, LabeledPoint v2, LabeledPoint v3);

  const std::array<LabeledPoint, 3>& vertices() const noexcept { return vertices_; }
  const Point& vertex(std::size_t i) const { return vertices_[i].point; }
  double diameter() const noexcept;

 private:
  std::array<LabeledPoint, 3> vertices_;
};

struct BarycentricCoords {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;

  double operator[](std::size_t i) const { return i == 0 ? lambda1 : i == 1 ? lambda2 : lambda3; }
};

BarycentricCoords barycentric_coords(const Triangle& t, Point p);

enum class Sign : std::int8_t { Negative = -1, Zero = 0, Positive = 1 };

struct SignPattern {
  std::array<Sign, 3> signs{Sign::Zero, Sign::Zero, Sign::Zero};

  bool has_zero() const noexcept;
  /// "+-0" style, one character per coordinate.
  std::string str() const;
  static std::optional<SignPattern> parse(std::string_view text);

  friend auto operator<=>(const SignPattern&, const SignPattern&) = default;
};

/// Maps each lambda to +, - or 0 (|lambda| <= tol).
SignPattern sign_pattern(const BarycentricCoords& b, double tol);

class ConvexHull {
 public:
  /// Counter-clockwise, strictly convex. Collinear input gives two vertices.
  explicit ConvexHull(std::vector<Point> ccw_vertices) : vertices_(std::move(ccw_vertices)) {}

  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  double diameter() const noexcept;

 private:
  std::vector<Point> vertices_;
};

/// Monotone-chain hull. Throws ShapeError for fewer than 2 points.
ConvexHull convex_hull(std::span<const Point> points);

enum class Containment { Inside, OnBoundary, Outside };

/// tol is relative to the hull diameter.
Containment point_in_hull(const ConvexHull& h, Point p, double tol);

// --- sweeps ---------------------------------------------------------------

enum class SegmentPlacement { OnSegment, BeyondSegment, OffLine };

enum class Unclassified { AtInfinity, DegenerateTriangle };

using Classification = std::variant<SignPattern, Containment, SegmentPlacement, Unclassified>;

std::string to_string(const Classification& c);
std::optional<Classification> parse_classification(std::string_view text);

struct SweepRecord {
  std::vector<std::uint64_t> k;  // repetitions per label
  Label label;
  PivotResult pivot = PivotResult::at_infinity();
  Classification classification = Unclassified::AtInfinity;
  bool violation = false;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

struct RegionViolation {
  std::vector<std::uint64_t> k;
  Label label;
  Classification classification;
  std::string reason;
};

struct LabelTally {
  Label label;
  std::map<Classification, std::size_t> counts;
  std::size_t finite = 0;
  std::size_t at_infinity = 0;
};

enum class RegionCheck { FourPoint, ThreePoint, HullBound };

struct RegionReport {
  RegionCheck check = RegionCheck::FourPoint;
  std::size_t combinations = 0;
  std::size_t evaluations = 0;
  std::vector<Label> checked_labels;
  std::vector<LabelTally> tallies;  // one per checked label, same order
  std::vector<RegionViolation> violations;
  std::vector<SweepRecord> records;  // only when SweepOptions::keep_records

  bool passed() const noexcept { return violations.empty(); }
  const LabelTally& tally(Label label) const;
};

struct SweepOptions {
  /// Barycentric sign tolerance; the three-point parameter tolerance; the
  /// hull boundary band relative to hull diameter.
  double tol = 1e-9;
  bool keep_records = false;
};

/// Every (k_1..k_4) in {0..k_max}^4 and every label: the pivot is classified
/// against the triangle of the other three points. Requires 4 points sorted by
/// non-decreasing x; throws ShapeError otherwise.
RegionReport four_point_region_sweep(const PointSet& s, std::uint64_t k_max,
                                     const SweepOptions& options = {});

/// Three points with strictly increasing x: outer-label pivots stay on the
/// segment between the other two, inner-label pivots on the line outside it.
RegionReport three_point_line_check(const PointSet& s, std::uint64_t k_max,
                                    const SweepOptions& options = {});

/// Pivots of the minimal- and maximal-x labels (all of them when tied) stay in
/// the convex hull of the remaining points. Requires n >= 3.
RegionReport hull_bound_check(const PointSet& s, std::uint64_t k_max,
                              const SweepOptions& options = {});

/// Labels attaining the minimum and the maximum abscissa, ascending.
std::vector<Label> extreme_labels(const PointSet& s);

/// Calls fn for each vector in {0..k_max}^n in lexicographic order.
void for_each_repetition(std::size_t n, std::uint64_t k_max,
                         const std::function<void(std::span<const std::uint64_t>)>& fn);

}  // namespace pivotlab
