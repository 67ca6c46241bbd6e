#include "pivotlab/regions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pivotlab/errors.hpp"

namespace pivotlab {

namespace {

// (b - a) x (p - a)
double cross(const Point& a, const Point& b, const Point& p) {
  return (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
}

Multiplicities to_multiplicities(std::span<const std::uint64_t> k) {
  return Multiplicities::from_repetitions(k);
}

char sign_char(Sign s) {
  switch (s) {
    case Sign::Negative: return '-';
    case Sign::Zero: return '0';
    case Sign::Positive: return '+';
  }
  return '?';
}

SignPattern pattern_of(const char* text) { return *SignPattern::parse(text); }

bool is_sorted_by_x(const PointSet& s, bool strict) {
  for (std::size_t j = 1; j < s.size(); ++j) {
    if (strict ? !(s[j - 1].x < s[j].x) : !(s[j - 1].x <= s[j].x)) return false;
  }
  return true;
}

class ReportBuilder {
 public:
  ReportBuilder(RegionCheck check, const std::vector<Label>& labels, bool keep_records) : keep_(keep_records) {
    report_.check = check;
    report_.checked_labels = labels;
    for (Label l : labels) report_.tallies.push_back(LabelTally{l, {}, 0, 0});
  }

  void add(std::span<const std::uint64_t> k, Label label, const PivotResult& pivot,
           const Classification& cls, const std::string& violation_reason) {
    ++report_.evaluations;
    LabelTally& t = tally(label);
    ++t.counts[cls];
    if (pivot.is_finite()) {
      ++t.finite;
    } else {
      ++t.at_infinity;
    }
    const bool violation = !violation_reason.empty();
    if (violation) {
      report_.violations.push_back(
          RegionViolation{{k.begin(), k.end()}, label, cls, violation_reason});
    }
    if (keep_) {
      report_.records.push_back(SweepRecord{{k.begin(), k.end()}, label, pivot, cls, violation});
    }
  }

  RegionReport finish(std::size_t combinations) {
    report_.combinations = combinations;
    if (keep_) {
      std::stable_sort(report_.records.begin(), report_.records.end(),
                       [](const SweepRecord& a, const SweepRecord& b) {
                         if (a.k != b.k) return a.k < b.k;
                         return a.label < b.label;
                       });
    }
    return std::move(report_);
  }

 private:
  LabelTally& tally(Label label) {
    for (auto& t : report_.tallies) {
      if (t.label == label) return t;
    }
    throw LabelError("label " + std::to_string(label.value) + " is not checked by this report");
  }

  RegionReport report_;
  bool keep_;
};

std::size_t power(std::uint64_t base, std::size_t exponent) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

}  // namespace

// --- triangles and barycentric coordinates --------------------------------

Triangle::Triangle(LabeledPoint v1, LabeledPoint v2, LabeledPoint v3) : vertices_{v1, v2, v3} {
  const double area2 = cross(v1.point, v2.point, v3.point);
  const double d = diameter();
  if (!(std::abs(area2) > 1e-12 * d * d)) {
    throw DegenerateTriangleError("triangle vertices are collinear");
  }
}

double Triangle::diameter() const noexcept {
  double d = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const Point& a = vertices_[i].point;
    const Point& b = vertices_[(i + 1) % 3].point;
    d = std::max(d, std::hypot(a.x - b.x, a.y - b.y));
  }
  return d;
}

BarycentricCoords barycentric_coords(const Triangle& t, Point p) {
  const Point& v1 = t.vertex(0);
  const Point& v2 = t.vertex(1);
  const Point& v3 = t.vertex(2);
  // Each lambda is the sub-area opposite its vertex over the full area;
  // anchoring at a vertex keeps far-away points free of quadratic cancellation.
  const double area = cross(v1, v2, v3);
  return {cross(v2, v3, p) / area, cross(v3, v1, p) / area, cross(v1, v2, p) / area};
}

bool SignPattern::has_zero() const noexcept {
  return std::find(signs.begin(), signs.end(), Sign::Zero) != signs.end();
}

std::string SignPattern::str() const {
  return {sign_char(signs[0]), sign_char(signs[1]), sign_char(signs[2])};
}

std::optional<SignPattern> SignPattern::parse(std::string_view text) {
  if (text.size() != 3) return std::nullopt;
  SignPattern p;
  for (std::size_t i = 0; i < 3; ++i) {
    switch (text[i]) {
      case '+': p.signs[i] = Sign::Positive; break;
      case '-': p.signs[i] = Sign::Negative; break;
      case '0': p.signs[i] = Sign::Zero; break;
      default: return std::nullopt;
    }
  }
  return p;
}

SignPattern sign_pattern(const BarycentricCoords& b, double tol) {
  SignPattern p;
  for (std::size_t i = 0; i < 3; ++i) {
    const double l = b[i];
    p.signs[i] = std::abs(l) <= tol ? Sign::Zero : (l > 0 ? Sign::Positive : Sign::Negative);
  }
  return p;
}

// --- classification text --------------------------------------------------

std::string to_string(const Classification& c) {
  struct Visitor {
    std::string operator()(const SignPattern& p) const { return p.str(); }
    std::string operator()(Containment h) const {
      switch (h) {
        case Containment::Inside: return "inside";
        case Containment::OnBoundary: return "boundary";
        case Containment::Outside: return "outside";
      }
      return "?";
    }
    std::string operator()(SegmentPlacement s) const {
      switch (s) {
        case SegmentPlacement::OnSegment: return "segment";
        case SegmentPlacement::BeyondSegment: return "beyond";
        case SegmentPlacement::OffLine: return "off-line";
      }
      return "?";
    }
    std::string operator()(Unclassified u) const {
      return u == Unclassified::AtInfinity ? "at-infinity" : "degenerate";
    }
  };
  return std::visit(Visitor{}, c);
}

std::optional<Classification> parse_classification(std::string_view text) {
  if (auto p = SignPattern::parse(text)) return Classification{*p};
  if (text == "inside") return Classification{Containment::Inside};
  if (text == "boundary") return Classification{Containment::OnBoundary};
  if (text == "outside") return Classification{Containment::Outside};
  if (text == "segment") return Classification{SegmentPlacement::OnSegment};
  if (text == "beyond") return Classification{SegmentPlacement::BeyondSegment};
  if (text == "off-line") return Classification{SegmentPlacement::OffLine};
  if (text == "at-infinity") return Classification{Unclassified::AtInfinity};
  if (text == "degenerate") return Classification{Unclassified::DegenerateTriangle};
  return std::nullopt;
}

const LabelTally& RegionReport::tally(Label label) const {
  for (const auto& t : tallies) {
    if (t.label == label) return t;
  }
  throw LabelError("label " + std::to_string(label.value) + " is not covered by this report");
}

// --- enumeration ----------------------------------------------------------

void for_each_repetition(std::size_t n, std::uint64_t k_max,
                         const std::function<void(std::span<const std::uint64_t>)>& fn) {
  std::vector<std::uint64_t> k(n, 0);
  while (true) {
    fn(k);
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (k[pos] < k_max) {
        ++k[pos];
        break;
      }
      k[pos] = 0;
      if (pos == 0) return;
    }
    if (n == 0) return;
  }
}

std::vector<Label> extreme_labels(const PointSet& s) {
  double lo = s[0].x;
  double hi = s[0].x;
  for (const Point& p : s.points()) {
    lo = std::min(lo, p.x);
    hi = std::max(hi, p.x);
  }
  std::vector<Label> out;
  for (Label l : s.labels()) {
    const double x = s.at(l).x;
    if (x == lo || x == hi) out.push_back(l);
  }
  return out;
}

// --- four points ----------------------------------------------------------

RegionReport four_point_region_sweep(const PointSet& s, std::uint64_t k_max,
                                     const SweepOptions& options) {
  if (s.size() != 4) {
    throw ShapeError("four-point sweep needs exactly 4 points, got " + std::to_string(s.size()));
  }
  if (!is_sorted_by_x(s, false)) {
    throw ShapeError("four-point sweep needs points sorted by x");
  }

  const std::vector<Label> labels = s.labels();
  std::array<std::optional<Triangle>, 4> triangles;
  for (Label i : labels) {
    std::vector<LabeledPoint> others;
    for (Label j : labels) {
      if (j != i) others.push_back({j, s.at(j)});
    }
    try {
      triangles[i.index()].emplace(others[0], others[1], others[2]);
    } catch (const DegenerateTriangleError&) {
    }
  }

  // Allowed zero-free patterns, indexed by label; patterns containing a zero
  // are boundary hits and never violations.
  const std::array<std::vector<SignPattern>, 4> allowed{{
      {pattern_of("+++")},
      {pattern_of("+--"), pattern_of("-++")},
      {pattern_of("++-"), pattern_of("--+")},
      {pattern_of("+++")},
  }};
  const SignPattern forbidden_a = pattern_of("+-+");
  const SignPattern forbidden_b = pattern_of("-+-");

  ReportBuilder builder(RegionCheck::FourPoint, labels, options.keep_records);
  for_each_repetition(4, k_max, [&](std::span<const std::uint64_t> k) {
    const Multiplicities d = to_multiplicities(k);
    for (Label i : labels) {
      const PivotResult pivot = pivot_point_weighted(s, i, d);
      if (pivot.is_at_infinity()) {
        builder.add(k, i, pivot, Unclassified::AtInfinity, "");
        continue;
      }
      const auto& tri = triangles[i.index()];
      if (!tri) {
        builder.add(k, i, pivot, Unclassified::DegenerateTriangle, "");
        continue;
      }
      const SignPattern p = sign_pattern(barycentric_coords(*tri, pivot.point()), options.tol);
      std::string reason;
      if (p == forbidden_a || p == forbidden_b) {
        reason = "pattern " + p.str() + " is excluded for every label";
      } else if (!p.has_zero()) {
        const auto& ok = allowed[i.index()];
        if (std::find(ok.begin(), ok.end(), p) == ok.end()) {
          reason = "label " + std::to_string(i.value) + " pivot in region " + p.str();
        }
      }
      builder.add(k, i, pivot, p, reason);
    }
  });
  return builder.finish(power(k_max + 1, 4));
}

// --- three points ---------------------------------------------------------

RegionReport three_point_line_check(const PointSet& s, std::uint64_t k_max,
                                    const SweepOptions& options) {
  if (s.size() != 3) {
    throw ShapeError("three-point check needs exactly 3 points, got " + std::to_string(s.size()));
  }
  if (!is_sorted_by_x(s, true)) {
    throw ShapeError("three-point check needs strictly increasing x");
  }

  const std::vector<Label> labels = s.labels();
  const double tol = options.tol;
  const double length_tol = tol * s.scale();

  ReportBuilder builder(RegionCheck::ThreePoint, labels, options.keep_records);
  for_each_repetition(3, k_max, [&](std::span<const std::uint64_t> k) {
    const Multiplicities d = to_multiplicities(k);
    for (Label i : labels) {
      const PivotResult pivot = pivot_point_weighted(s, i, d);
      if (pivot.is_at_infinity()) {
        builder.add(k, i, pivot, Unclassified::AtInfinity, "");
        continue;
      }
      std::vector<Point> others;
      for (Label j : labels) {
        if (j != i) others.push_back(s.at(j));
      }
      const Point& a = others[0];
      const Point& b = others[1];
      const Point& p = pivot.point();
      const double dx = b.x - a.x;
      const double dy = b.y - a.y;
      const double len = std::hypot(dx, dy);
      const double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / (len * len);
      const double off_line = std::abs(cross(a, b, p)) / len;

      const bool outer = i.value != 2;
      SegmentPlacement placement;
      std::string reason;
      if (off_line > length_tol) {
        placement = SegmentPlacement::OffLine;
        reason = "pivot leaves the line through the other two points";
      } else if (outer) {
        // Endpoints belong to the segment.
        placement = (t >= -tol && t <= 1.0 + tol) ? SegmentPlacement::OnSegment
                                                  : SegmentPlacement::BeyondSegment;
        if (placement != SegmentPlacement::OnSegment) reason = "outer-label pivot beyond segment";
      } else {
        // Endpoints count as outside for the inner label.
        placement = (t > tol && t < 1.0 - tol) ? SegmentPlacement::OnSegment
                                               : SegmentPlacement::BeyondSegment;
        if (placement != SegmentPlacement::BeyondSegment) reason = "inner-label pivot inside segment";
      }
      builder.add(k, i, pivot, placement, reason);
    }
  });
  return builder.finish(power(k_max + 1, 3));
}

// --- hull bound -----------------------------------------------------------

RegionReport hull_bound_check(const PointSet& s, std::uint64_t k_max, const SweepOptions& options) {
  if (s.size() < 3) {
    throw ShapeError("hull check needs at least 3 points, got " + std::to_string(s.size()));
  }
  const std::vector<Label> extremes = extreme_labels(s);
  const std::size_t n = s.size();

  ReportBuilder builder(RegionCheck::HullBound, extremes, options.keep_records);
  for (Label e : extremes) {
    std::vector<Point> others;
    for (Label j : s.labels()) {
      if (j != e) others.push_back(s.at(j));
    }
    const ConvexHull hull = convex_hull(others);

    std::vector<std::uint64_t> k(n, 0);
    for_each_repetition(n - 1, k_max, [&](std::span<const std::uint64_t> rest) {
      for (std::size_t j = 0, r = 0; j < n; ++j) {
        k[j] = (j == e.index()) ? 0 : rest[r++];
      }
      const PivotResult pivot = pivot_point_weighted(s, e, to_multiplicities(k));
      if (pivot.is_at_infinity()) {
        // Extreme labels have same-signed chi, so this should be unreachable.
        builder.add(k, e, pivot, Unclassified::AtInfinity, "extreme-label pivot at infinity");
        return;
      }
      const Containment c = point_in_hull(hull, pivot.point(), options.tol);
      builder.add(k, e, pivot, c, c == Containment::Outside ? "pivot outside hull of the others" : "");
    });
  }
  return builder.finish(power(k_max + 1, n - 1));
}

}  // namespace pivotlab
