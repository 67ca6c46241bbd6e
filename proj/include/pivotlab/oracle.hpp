#pragma once

// Brute-force ground truth: multiplicities expanded into literal repeated
// rows and fitted through the raw 2x2 normal equations, plus the pivot
// invariance and convergence checks built on it.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pivotlab/geometry.hpp"

namespace pivotlab {

/// Rows (x_r, 1) of the design matrix A and the observations y.
struct ExpandedSystem {
  std::vector<std::array<double, 2>> rows;
  std::vector<double> y;

  std::size_t size() const noexcept { return rows.size(); }
};

/// Point j appears delta_j times, ordered by label then repetition.
ExpandedSystem expand_multiplicities(const PointSet& s, const Multiplicities& d);

/// Solves A^T A p = A^T y with the sums accumulated in quad precision and
/// Cramer's rule. Throws DegenerateXError when every row shares one x.
RegressionLine fit_expanded(const ExpandedSystem& e);

enum class Verdict { Pass, Fail, NotApplicable };

const char* to_string(Verdict v);

struct InvarianceReport {
  Verdict verdict = Verdict::NotApplicable;
  std::optional<Point> pivot;
  std::vector<double> distances;  // index k = repetitions of the anchor
  double max_distance = 0.0;
  double threshold = 0.0;         // tol * coordinate scale
};

/// Repeats label i k = 0..k_max times, fits each expanded system and measures
/// the perpendicular distance from the unrepeated pivot of i to the line.
InvarianceReport verify_pivot_invariance(const PointSet& s, Label i, std::uint64_t k_max,
                                         double tol);

struct ConvergenceReport {
  Verdict verdict = Verdict::NotApplicable;
  std::vector<std::uint64_t> schedule;
  /// |pivot_i(k) - S_r| per schedule entry; empty where the pivot is at infinity.
  std::vector<std::optional<double>> distances;
  /// max over non-final entries with k >= 1 of k * distance(k).
  std::optional<double> rate_constant;
  bool rate_ok = true;
  bool limit_ok = true;
  double limit_threshold = 0.0;  // 1e-5 * coordinate scale
};

inline constexpr std::uint64_t kConvergenceProbe = 1'000'000;

/// Repeats label r k times along the schedule and follows the pivot of
/// label i. Passes when the final distance is at most 2 C / k_final for the
/// rate constant C seen earlier in the schedule (plus a 1e-12 * scale
/// round-off floor), and every entry with
/// k >= 10^6 lies within 1e-5 * scale of S_r. Throws LabelError if r == i.
ConvergenceReport verify_convergence(const PointSet& s, Label r, Label i,
                                     std::span<const std::uint64_t> k_schedule);

/// {0, 10, 100, ..., 10^6}
std::vector<std::uint64_t> default_convergence_schedule();

}  // namespace pivotlab
