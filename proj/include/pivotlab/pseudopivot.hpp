#pragma once

// Pseudopivot dynamics: the pivot abscissa formula applied to collinear
// triples, iterated.
//
// For a triple (a, b, c) each value is replaced by the pivot abscissa it
// would have among the three,
//   a' = a + ((b - a)^2 + (c - a)^2) / ((b - a) + (c - a)),
// and likewise for b and c. A value equal to the average of the other two
// has a vanishing denominator and pivots at infinity. Labels 0, 1, 2 stand
// for a, b, c and follow their values across iterations.
//
// Every routine exists for double (floating mode) and Rational (exact mode).
// Exact mode is the reference: the map is rational, so rational inputs stay
// rational, while floating error grows with every step.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pivotlab/rational.hpp"

namespace pivotlab {

enum class ValueMode { Floating, Exact };

template <typename T>
struct ModeOf;
template <>
struct ModeOf<double> {
  static constexpr ValueMode value = ValueMode::Floating;
};
template <>
struct ModeOf<Rational> {
  static constexpr ValueMode value = ValueMode::Exact;
};

template <typename T>
struct PseudopivotState {
  static constexpr ValueMode mode = ModeOf<T>::value;

  std::array<T, 3> values;

  const T& operator[](std::size_t label) const { return values[label]; }
  friend bool operator==(const PseudopivotState&, const PseudopivotState&) = default;
};

using FloatState = PseudopivotState<double>;
using ExactState = PseudopivotState<Rational>;

/// The value with this label pivots at infinity.
struct Diverged {
  std::size_t label = 0;
  friend bool operator==(const Diverged&, const Diverged&) = default;
};

template <typename T>
using StepResult = std::variant<PseudopivotState<T>, Diverged>;

/// Floating mode treats |avg(other two) - value| <= 1e-12 * range as zero.
template <typename T>
StepResult<T> pseudopivot_step(const PseudopivotState<T>& s);

/// Labels sorted by ascending value (ties by label).
using Ordering = std::array<std::uint8_t, 3>;

/// "abc"-style rendering, lowest value first.
std::string to_string(const Ordering& order);

enum class Termination { Completed, Diverged, DigitsExceeded };

std::string to_string(Termination t);

/// Exact iteration stops once a numerator or denominator would need more bits.
inline constexpr std::size_t kMaxRationalBits = 1'000'000;

template <typename T>
struct IterationTrace {
  std::vector<PseudopivotState<T>> states;  // states[0] is the input
  std::vector<Ordering> orders;             // per state
  std::vector<T> ranges;                    // per state, max - min
  Termination termination = Termination::Completed;
  std::optional<Diverged> diverged;         // set when termination == Diverged

  /// Number of completed steps.
  std::size_t steps() const noexcept { return states.size() - 1; }
};

template <typename T>
IterationTrace<T> iterate(const PseudopivotState<T>& s, std::size_t n);

enum class Bifurcation { NextMin, NextMax, AtThreshold };

std::string to_string(Bifurcation b);

/// Predicts where the inner value lands after one step: above the average of
/// the outer two it becomes the next minimum, below it the next maximum.
/// Throws DegenerateStateError unless the three values are distinct.
template <typename T>
Bifurcation classify_bifurcation(const PseudopivotState<T>& s);

template <typename T>
Ordering ordering(const PseudopivotState<T>& s);

template <typename T>
T range(const PseudopivotState<T>& s);

/// One ordering per state of the trace.
template <typename T>
std::vector<Ordering> permutation_sequence(const IterationTrace<T>& t);

struct RangeCheck {
  /// Steps k (counted from 1) for which range(k) > range(k - 1) held
  /// consecutively from the start, in exact arithmetic.
  std::size_t holds_up_to = 0;
  std::optional<std::size_t> first_violation;
  Termination termination = Termination::Completed;
  /// First step at which floating iteration reaches a different verdict
  /// (or terminates differently) than exact iteration.
  std::optional<std::size_t> floating_disagreement;
};

/// Checks strict range growth for up to n steps. Exact arithmetic decides;
/// a floating run alongside it is only compared.
RangeCheck conjecture_range_check(const ExactState& s, std::size_t n);
/// Converts the doubles exactly and defers to the exact overload.
RangeCheck conjecture_range_check(const FloatState& s, std::size_t n);

ExactState to_exact(const FloatState& s);
FloatState to_floating(const ExactState& s);

}  // namespace pivotlab
