#include "pivotlab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pivotlab/errors.hpp"

namespace pivotlab {

ExpandedSystem expand_multiplicities(const PointSet& s, const Multiplicities& d) {
  if (s.size() != d.size()) {
    throw ShapeError("multiplicities have " + std::to_string(d.size()) + " entries for " +
                     std::to_string(s.size()) + " points");
  }
  ExpandedSystem e;
  e.rows.reserve(d.total());
  e.y.reserve(d.total());
  for (std::size_t j = 0; j < s.size(); ++j) {
    for (std::uint64_t r = 0; r < d[j]; ++r) {
      e.rows.push_back({s[j].x, 1.0});
      e.y.push_back(s[j].y);
    }
  }
  return e;
}

RegressionLine fit_expanded(const ExpandedSystem& e) {
  if (e.rows.empty() || e.rows.size() != e.y.size()) {
    throw ShapeError("expanded system needs matching, non-empty rows and observations");
  }
  const auto [lo, hi] = std::minmax_element(e.rows.begin(), e.rows.end(),
                                            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  if ((*lo)[0] == (*hi)[0]) {
    throw DegenerateXError("every row has the same x");
  }

  //  [ sum x^2  sum x ] [m]   [ sum x y ]
  //  [ sum x    N     ] [b] = [ sum y   ]
  // Accumulated in binary128: products of doubles are exact there, and the
  // determinant keeps its digits for nearly vertical data where long double
  // gives out around 1e-12.
  using quad = __float128;
  quad sxx = 0, sx = 0, n = 0, sxy = 0, sy = 0;
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    const quad x = e.rows[r][0];
    const quad one = e.rows[r][1];
    const quad y = e.y[r];
    sxx += x * x;
    sx += x * one;
    n += one * one;
    sxy += x * y;
    sy += one * y;
  }
  const quad det = sxx * n - sx * sx;
  if (!(det > 0)) {
    throw DegenerateXError("normal matrix is singular");
  }

  RegressionLine line;
  line.m = static_cast<double>((sxy * n - sx * sy) / det);
  line.b = static_cast<double>((sxx * sy - sx * sxy) / det);
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    const double res = line.m * e.rows[r][0] + line.b * e.rows[r][1] - e.y[r];
    line.sse += res * res;
  }
  return line;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

InvarianceReport verify_pivot_invariance(const PointSet& s, Label i, std::uint64_t k_max,
                                         double tol) {
  InvarianceReport report;
  report.threshold = tol * s.scale();
  const PivotResult pivot = pivot_point(s, i);
  if (pivot.is_at_infinity()) return report;
  report.pivot = pivot.point();

  std::vector<std::uint64_t> delta(s.size(), 1);
  report.distances.reserve(k_max + 1);
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    delta[i.index()] = k + 1;
    const RegressionLine line = fit_expanded(expand_multiplicities(s, Multiplicities(delta)));
    const double dist = line_distance(line, pivot.point());
    report.distances.push_back(dist);
    report.max_distance = std::max(report.max_distance, dist);
  }
  report.verdict = report.max_distance <= report.threshold ? Verdict::Pass : Verdict::Fail;
  return report;
}

ConvergenceReport verify_convergence(const PointSet& s, Label r, Label i,
                                     std::span<const std::uint64_t> k_schedule) {
  s.check(r);
  s.check(i);
  if (r == i) {
    throw LabelError("the repeated label and the followed label must differ");
  }
  ConvergenceReport report;
  report.schedule.assign(k_schedule.begin(), k_schedule.end());
  report.limit_threshold = 1e-5 * s.scale();
  if (k_schedule.empty()) return report;

  const Point target = s.at(r);
  std::vector<std::uint64_t> delta(s.size(), 1);
  for (std::uint64_t k : k_schedule) {
    delta[r.index()] = k + 1;
    const PivotResult p = pivot_point_weighted(s, i, Multiplicities(delta));
    if (p.is_at_infinity()) {
      report.distances.push_back(std::nullopt);
    } else {
      report.distances.push_back(
          std::hypot(p.point().x - target.x, p.point().y - target.y));
    }
  }

  const std::size_t last = k_schedule.size() - 1;
  for (std::size_t e = 0; e < last; ++e) {
    if (k_schedule[e] >= 1 && report.distances[e]) {
      const double c = static_cast<double>(k_schedule[e]) * *report.distances[e];
      report.rate_constant = std::max(report.rate_constant.value_or(0.0), c);
    }
  }
  const auto& final_distance = report.distances[last];
  if (!final_distance) {
    report.rate_ok = false;
  } else if (report.rate_constant && k_schedule[last] >= 1) {
    // round-off floor: exact convergence (two points) leaves ~1e-15 noise
    const double floor = 1e-12 * s.scale();
    report.rate_ok = *final_distance <=
                     2.0 * *report.rate_constant / static_cast<double>(k_schedule[last]) + floor;
  }
  for (std::size_t e = 0; e < k_schedule.size(); ++e) {
    if (k_schedule[e] >= kConvergenceProbe) {
      report.limit_ok = report.limit_ok && report.distances[e] &&
                        *report.distances[e] <= report.limit_threshold;
    }
  }
  report.verdict = (report.rate_ok && report.limit_ok) ? Verdict::Pass : Verdict::Fail;
  return report;
}

std::vector<std::uint64_t> default_convergence_schedule() {
  std::vector<std::uint64_t> schedule{0};
  for (std::uint64_t k = 10; k <= kConvergenceProbe; k *= 10) schedule.push_back(k);
  return schedule;
}

}  // namespace pivotlab
