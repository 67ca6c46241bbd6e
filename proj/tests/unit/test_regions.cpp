#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "pivotlab/errors.hpp"
#include "pivotlab/regions.hpp"
#include "support/random_sets.hpp"

using namespace pivotlab;
using pivotlab::testing::Rng;

namespace {

Triangle unit_triangle() {
  return Triangle({Label{1}, {0, 0}}, {Label{2}, {1, 0}}, {Label{3}, {0, 1}});
}

ConvexHull unit_square() {
  const std::vector<Point> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  return convex_hull(pts);
}

PointSet demo4() { return PointSet({{0, 0}, {1, 3}, {2, 1}, {3, 2}}); }

// Independent containment: p is inside when it has nonnegative barycentric
// coordinates (solved by Cramer's rule here) in one fan triangle.
bool in_some_fan_triangle(const std::vector<Point>& v, Point p, double slack) {
  for (std::size_t k = 1; k + 1 < v.size(); ++k) {
    const Point a = v[0], b = v[k], c = v[k + 1];
    const double det = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
    const double l2 = ((p.x - a.x) * (c.y - a.y) - (c.x - a.x) * (p.y - a.y)) / det;
    const double l3 = ((b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y)) / det;
    const double l1 = 1 - l2 - l3;
    if (l1 >= -slack && l2 >= -slack && l3 >= -slack) return true;
  }
  return false;
}

std::size_t count_pattern(const LabelTally& t, const std::string& s) {
  const auto it = t.counts.find(*SignPattern::parse(s));
  return it == t.counts.end() ? 0 : it->second;
}

}  // namespace

// --- barycentric ----------------------------------------------------------

TEST(Barycentric, Vertex) {
  const auto b = barycentric_coords(unit_triangle(), {0, 0});
  EXPECT_DOUBLE_EQ(b.lambda1, 1.0);
  EXPECT_DOUBLE_EQ(b.lambda2, 0.0);
  EXPECT_DOUBLE_EQ(b.lambda3, 0.0);
}

TEST(Barycentric, Centroid) {
  const auto b = barycentric_coords(unit_triangle(), {1.0 / 3, 1.0 / 3});
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(b[i], 1.0 / 3, 1e-15);
}

TEST(Barycentric, OutsideOneEdge) {
  const auto b = barycentric_coords(unit_triangle(), {-0.5, 0.5});
  EXPECT_NEAR(b.lambda1, 1.0, 1e-15);
  EXPECT_NEAR(b.lambda2, -0.5, 1e-15);
  EXPECT_NEAR(b.lambda3, 0.5, 1e-15);
}

TEST(Barycentric, CollinearTriangleRejected) {
  EXPECT_THROW(Triangle({Label{1}, {0, 0}}, {Label{2}, {1, 1}}, {Label{3}, {2, 2}}),
               DegenerateTriangleError);
}

TEST(Barycentric, PartitionOfUnityAndReconstruction) {
  Rng rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    Point v[3];
    for (auto& p : v) p = {pivotlab::testing::uniform(rng, -10, 10), pivotlab::testing::uniform(rng, -10, 10)};
    const double area2 = (v[1].x - v[0].x) * (v[2].y - v[0].y) - (v[2].x - v[0].x) * (v[1].y - v[0].y);
    if (std::abs(area2) < 1e-3) continue;
    const Triangle t({Label{1}, v[0]}, {Label{2}, v[1]}, {Label{3}, v[2]});
    const Point p{pivotlab::testing::uniform(rng, -30, 30), pivotlab::testing::uniform(rng, -30, 30)};
    const auto b = barycentric_coords(t, p);
    EXPECT_NEAR(b.lambda1 + b.lambda2 + b.lambda3, 1.0, 1e-9);
    const double rx = b.lambda1 * v[0].x + b.lambda2 * v[1].x + b.lambda3 * v[2].x;
    const double ry = b.lambda1 * v[0].y + b.lambda2 * v[1].y + b.lambda3 * v[2].y;
    EXPECT_NEAR(rx, p.x, 1e-9 * 30);
    EXPECT_NEAR(ry, p.y, 1e-9 * 30);
    // no point has all three coordinates negative
    EXPECT_NE(sign_pattern(b, 1e-9).str(), "---");
    for (std::size_t i = 0; i < 3; ++i) {
      const auto pattern = sign_pattern(barycentric_coords(t, v[i]), 1e-9).str();
      std::string expected = "000";
      expected[i] = '+';
      EXPECT_EQ(pattern, expected);
    }
  }
}

// --- sign patterns --------------------------------------------------------

TEST(SignPattern, Examples) {
  EXPECT_EQ(sign_pattern({0.5, 0.25, 0.25}, 1e-9).str(), "+++");
  EXPECT_EQ(sign_pattern({1, -0.5, 0.5}, 1e-9).str(), "+-+");
  const auto edge = sign_pattern({0, 0.5, 0.5}, 1e-9);
  EXPECT_EQ(edge.str(), "0++");
  EXPECT_TRUE(edge.has_zero());
  EXPECT_EQ(sign_pattern({1e-10, 0.5, 0.5}, 1e-9).str(), "0++");
}

TEST(SignPattern, ParseRoundTrip) {
  for (const char* s : {"+++", "+--", "-++", "0+-", "000"}) {
    const auto p = SignPattern::parse(s);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->str(), s);
  }
  EXPECT_FALSE(SignPattern::parse("++").has_value());
  EXPECT_FALSE(SignPattern::parse("+x+").has_value());
}

TEST(Classification, StringRoundTrip) {
  const std::vector<Classification> all{*SignPattern::parse("+-0"),
                                        Containment::Inside,
                                        Containment::OnBoundary,
                                        Containment::Outside,
                                        SegmentPlacement::OnSegment,
                                        SegmentPlacement::BeyondSegment,
                                        SegmentPlacement::OffLine,
                                        Unclassified::AtInfinity,
                                        Unclassified::DegenerateTriangle};
  std::set<std::string> seen;
  for (const auto& c : all) {
    const std::string s = to_string(c);
    EXPECT_TRUE(seen.insert(s).second) << s;
    EXPECT_EQ(parse_classification(s), c);
  }
  EXPECT_FALSE(parse_classification("sideways").has_value());
}

// --- convex hull ----------------------------------------------------------

TEST(ConvexHull, TriangleIsItsOwnHull) {
  const std::vector<Point> pts{{0, 0}, {2, 0}, {1, 3}};
  EXPECT_EQ(convex_hull(pts).vertices().size(), 3u);
}

TEST(ConvexHull, SquareCornersPlusCenter) {
  const std::vector<Point> pts{{0, 0}, {1, 0}, {0.5, 0.5}, {1, 1}, {0, 1}};
  const auto h = convex_hull(pts);
  ASSERT_EQ(h.vertices().size(), 4u);
  for (const Point& v : h.vertices()) EXPECT_NE(v, (Point{0.5, 0.5}));
}

TEST(ConvexHull, CollinearGivesTwoVertices) {
  const std::vector<Point> pts{{0, 0}, {1, 1}, {2, 2}};
  const auto h = convex_hull(pts);
  ASSERT_EQ(h.vertices().size(), 2u);
  EXPECT_EQ(h.vertices()[0], (Point{0, 0}));
  EXPECT_EQ(h.vertices()[1], (Point{2, 2}));
}

TEST(ConvexHull, TooFewPoints) {
  const std::vector<Point> pts{{0, 0}};
  EXPECT_THROW(convex_hull(pts), ShapeError);
}

TEST(ConvexHull, CounterClockwiseAndContainsInput) {
  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Point> pts;
    const std::size_t n = pivotlab::testing::uniform_index(rng, 3, 12);
    for (std::size_t j = 0; j < n; ++j) pts.push_back({pivotlab::testing::uniform(rng, -10, 10), pivotlab::testing::uniform(rng, -10, 10)});
    const auto h = convex_hull(pts);
    const auto& v = h.vertices();
    for (std::size_t k = 0; k < v.size(); ++k) {
      const Point a = v[k], b = v[(k + 1) % v.size()], c = v[(k + 2) % v.size()];
      EXPECT_GT((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y), 0.0);
    }
    for (const Point& p : pts) EXPECT_NE(point_in_hull(h, p, 1e-9), Containment::Outside);
  }
}

TEST(PointInHull, SquareExamples) {
  const auto h = unit_square();
  EXPECT_EQ(point_in_hull(h, {0.5, 0.5}, 1e-9), Containment::Inside);
  EXPECT_EQ(point_in_hull(h, {1, 1}, 1e-9), Containment::OnBoundary);
  EXPECT_EQ(point_in_hull(h, {0.5, 0}, 1e-9), Containment::OnBoundary);
  EXPECT_EQ(point_in_hull(h, {0.5 + 2 * std::sqrt(2.0), 0.5}, 1e-9), Containment::Outside);
}

TEST(PointInHull, AgreesWithFanTriangulation) {
  Rng rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Point> pts;
    const std::size_t n = pivotlab::testing::uniform_index(rng, 3, 8);
    for (std::size_t j = 0; j < n; ++j) pts.push_back({pivotlab::testing::uniform(rng, -10, 10), pivotlab::testing::uniform(rng, -10, 10)});
    const auto h = convex_hull(pts);
    if (h.vertices().size() < 3) continue;
    for (int q = 0; q < 20; ++q) {
      const Point p{pivotlab::testing::uniform(rng, -12, 12), pivotlab::testing::uniform(rng, -12, 12)};
      const Containment c = point_in_hull(h, p, 1e-9);
      if (c == Containment::Inside) {
        EXPECT_TRUE(in_some_fan_triangle(h.vertices(), p, 0.0));
      } else if (c == Containment::Outside) {
        EXPECT_FALSE(in_some_fan_triangle(h.vertices(), p, 0.0));
      }
    }
  }
}

// --- repetition enumeration -----------------------------------------------

TEST(ForEachRepetition, LexicographicAndComplete) {
  std::vector<std::vector<std::uint64_t>> seen;
  for_each_repetition(3, 2, [&](std::span<const std::uint64_t> k) { seen.emplace_back(k.begin(), k.end()); });
  ASSERT_EQ(seen.size(), 27u);
  EXPECT_EQ(seen.front(), (std::vector<std::uint64_t>{0, 0, 0}));
  EXPECT_EQ(seen[1], (std::vector<std::uint64_t>{0, 0, 1}));
  EXPECT_EQ(seen.back(), (std::vector<std::uint64_t>{2, 2, 2}));
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
}

// --- four-point sweep -----------------------------------------------------

TEST(FourPointSweep, DemoSmall) {
  const auto r = four_point_region_sweep(demo4(), 2);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.combinations, 81u);
  EXPECT_EQ(r.evaluations, 324u);
  const LabelTally& t4 = r.tally(Label{4});
  EXPECT_EQ(count_pattern(t4, "+++"), t4.finite);
  EXPECT_GT(t4.finite, 0u);
}

TEST(FourPointSweep, DemoFullScale) {
  const auto r = four_point_region_sweep(demo4(), 12);
  EXPECT_TRUE(r.passed()) << r.violations.size() << " violations";
  EXPECT_EQ(r.combinations, 28561u);
  for (Label l : {Label{1}, Label{4}}) {
    const auto& t = r.tally(l);
    EXPECT_EQ(count_pattern(t, "+++"), t.finite);
  }
  for (const auto& t : r.tallies) {
    EXPECT_EQ(count_pattern(t, "+-+"), 0u);
    EXPECT_EQ(count_pattern(t, "-+-"), 0u);
  }
}

TEST(FourPointSweep, BaseCaseMatchesDirectClassification) {
  SweepOptions o;
  o.keep_records = true;
  const PointSet s = demo4();
  const auto r = four_point_region_sweep(s, 0, o);
  ASSERT_EQ(r.records.size(), 4u);
  for (const SweepRecord& rec : r.records) {
    EXPECT_EQ(rec.pivot, pivot_point(s, rec.label));
    std::vector<LabeledPoint> others;
    for (Label l : s.labels()) {
      if (l != rec.label) others.push_back({l, s.at(l)});
    }
    const Triangle t(others[0], others[1], others[2]);
    ASSERT_TRUE(rec.pivot.is_finite());
    EXPECT_EQ(rec.classification,
              Classification(sign_pattern(barycentric_coords(t, rec.pivot.point()), o.tol)));
  }
}

TEST(FourPointSweep, RandomSetsHaveNoViolations) {
  Rng rng(34);
  for (int trial = 0; trial < 30; ++trial) {
    const PointSet s = pivotlab::testing::random_sorted_set(rng, 4);
    const auto r = four_point_region_sweep(s, 4);
    EXPECT_TRUE(r.passed()) << "trial " << trial << ": " << r.violations.size();
  }
}

TEST(FourPointSweep, RequiresFourSortedPoints) {
  EXPECT_THROW(four_point_region_sweep(PointSet({{0, 0}, {1, 1}, {2, 0}}), 1), ShapeError);
  EXPECT_THROW(four_point_region_sweep(PointSet({{1, 0}, {0, 1}, {2, 0}, {3, 1}}), 1), ShapeError);
}

TEST(FourPointSweep, RecordsAreOrderedByKThenLabel) {
  SweepOptions o;
  o.keep_records = true;
  const auto r = four_point_region_sweep(demo4(), 1, o);
  ASSERT_EQ(r.records.size(), 64u);
  for (std::size_t j = 1; j < r.records.size(); ++j) {
    const auto& a = r.records[j - 1];
    const auto& b = r.records[j];
    EXPECT_TRUE(std::tie(a.k, a.label) < std::tie(b.k, b.label));
  }
}

// --- three-point check ----------------------------------------------------

TEST(ThreePointCheck, DemoSet) {
  const auto r = three_point_line_check(PointSet({{0, 0}, {1, 1}, {2, 0}}), 3);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.combinations, 64u);
}

TEST(ThreePointCheck, OuterPivotIsCollinearWithOtherTwo) {
  const PointSet s({{0, 0}, {1, 1}, {2, 0}});
  const Point p = pivot_point(s, Label{1}).point();
  const Point a = s[1], b = s[2];
  const double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
  EXPECT_LE(std::abs(cross) / std::hypot(b.x - a.x, b.y - a.y), 1e-9);
}

TEST(ThreePointCheck, CollinearData) {
  SweepOptions o;
  o.keep_records = true;
  const auto r = three_point_line_check(PointSet({{0, 0}, {1, 0}, {2, 0}}), 3, o);
  EXPECT_TRUE(r.passed());
  for (const auto& rec : r.records) {
    if (rec.pivot.is_finite()) EXPECT_EQ(rec.pivot.point().y, 0.0);
  }
}

TEST(ThreePointCheck, ClassificationsPerRole) {
  SweepOptions o;
  o.keep_records = true;
  const auto r = three_point_line_check(PointSet({{0, 0}, {1, 1}, {2, 0}}), 3, o);
  for (const auto& rec : r.records) {
    if (rec.pivot.is_at_infinity()) {
      EXPECT_EQ(rec.classification, Classification(Unclassified::AtInfinity));
    } else if (rec.label == Label{2}) {
      EXPECT_EQ(rec.classification, Classification(SegmentPlacement::BeyondSegment));
    } else {
      EXPECT_EQ(rec.classification, Classification(SegmentPlacement::OnSegment));
    }
  }
}

TEST(ThreePointCheck, RandomSets) {
  Rng rng(35);
  for (int trial = 0; trial < 50; ++trial) {
    const auto r = three_point_line_check(pivotlab::testing::random_sorted_set(rng, 3), 4);
    EXPECT_TRUE(r.passed()) << "trial " << trial;
  }
}

TEST(ThreePointCheck, RequiresStrictlyIncreasingX) {
  EXPECT_THROW(three_point_line_check(PointSet({{0, 0}, {0, 1}, {2, 0}}), 1), ShapeError);
  EXPECT_THROW(three_point_line_check(demo4(), 1), ShapeError);
}

// --- hull bound -----------------------------------------------------------

TEST(HullBound, RandomFivePoints) {
  Rng rng(36);
  for (int trial = 0; trial < 10; ++trial) {
    const auto r = hull_bound_check(pivotlab::testing::random_point_set(rng, 5), 2);
    EXPECT_TRUE(r.passed());
  }
}

TEST(HullBound, AgreesWithFourPointSweepOnExtremeLabels) {
  Rng rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const PointSet s = pivotlab::testing::random_sorted_set(rng, 4);
    const auto hull = hull_bound_check(s, 3);
    const auto sweep = four_point_region_sweep(s, 3);
    for (Label l : {Label{1}, Label{4}}) {
      const auto& th = hull.tally(l);
      const auto& ts = sweep.tally(l);
      // The sweep also varies k of the label itself, which leaves its pivot unchanged.
      EXPECT_EQ(th.finite * 4, ts.finite);
      const auto inside = th.counts.find(Containment::Inside);
      EXPECT_EQ((inside == th.counts.end() ? 0 : inside->second) * 4, count_pattern(ts, "+++"));
    }
    EXPECT_TRUE(hull.passed());
  }
}

TEST(HullBound, TiedExtremesAreAllChecked) {
  const PointSet s({{0, 0}, {0, 1}, {1, 3}, {2, 1}, {2, -1}});
  EXPECT_EQ(extreme_labels(s), (std::vector<Label>{Label{1}, Label{2}, Label{4}, Label{5}}));
  const auto r = hull_bound_check(s, 0);
  EXPECT_EQ(r.checked_labels.size(), 4u);
  EXPECT_EQ(r.combinations, 1u);
}

TEST(HullBound, NeedsThreePoints) {
  EXPECT_THROW(hull_bound_check(PointSet({{0, 0}, {1, 1}}), 1), ShapeError);
}
