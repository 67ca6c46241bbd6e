#include "pivotlab/pseudopivot.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>

#include "pivotlab/errors.hpp"

namespace pivotlab {

namespace {

bool negligible(const double& value, const double& reference) {
  return std::abs(value) <= 1e-12 * reference;
}

bool negligible(const Rational& value, const Rational&) { return sgn(value) == 0; }

bool too_large(const PseudopivotState<double>&) { return false; }

bool too_large(const PseudopivotState<Rational>& s) {
  return std::any_of(s.values.begin(), s.values.end(),
                     [](const Rational& q) { return bit_size(q) > kMaxRationalBits; });
}

// Exact step on a common denominator: with a = A/D etc.,
//   a' = (B^2 + C^2 - A(B + C)) / (D (B + C - 2A)).
// One gcd per value instead of one per rational operation; at a few hundred
// thousand bits the gcds dominate.
StepResult<Rational> exact_step(const PseudopivotState<Rational>& s) {
  mpz_class d;
  mpz_lcm(d.get_mpz_t(), s[0].get_den_mpz_t(), s[1].get_den_mpz_t());
  mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), s[2].get_den_mpz_t());
  std::array<mpz_class, 3> n;
  for (std::size_t i = 0; i < 3; ++i) {
    mpz_class scale;
    mpz_divexact(scale.get_mpz_t(), d.get_mpz_t(), s[i].get_den_mpz_t());
    n[i] = s[i].get_num() * scale;
  }
  PseudopivotState<Rational> next = s;
  for (std::size_t i = 0; i < 3; ++i) {
    const mpz_class& a = n[i];
    const mpz_class& b = n[(i + 1) % 3];
    const mpz_class& c = n[(i + 2) % 3];
    const mpz_class bc = b + c;
    const mpz_class den = bc - 2 * a;
    if (sgn(den) == 0) return Diverged{i};
    Rational v(mpz_class(b * b + c * c - a * bc), mpz_class(den * d));
    v.canonicalize();
    next.values[i] = std::move(v);
  }
  return next;
}

}  // namespace

template <typename T>
T range(const PseudopivotState<T>& s) {
  const T* lo = &s[0];
  const T* hi = &s[0];
  for (const T& v : s.values) {
    if (v < *lo) lo = &v;
    if (*hi < v) hi = &v;
  }
  return T(*hi - *lo);
}

template <typename T>
Ordering ordering(const PseudopivotState<T>& s) {
  Ordering order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint8_t a, std::uint8_t b) { return s[a] < s[b]; });
  return order;
}

template <typename T>
StepResult<T> pseudopivot_step(const PseudopivotState<T>& s) {
  if constexpr (std::is_same_v<T, Rational>) return exact_step(s);
  const T spread = range(s);
  PseudopivotState<T> next = s;
  for (std::size_t i = 0; i < 3; ++i) {
    // Same accumulation order as the planar pivot formula with unit weights,
    // including the zero self term.
    T denominator = 0;
    T moment = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      const T chi = s[j] - s[i];
      denominator += chi;
      moment += chi * chi;
    }
    // denominator = 2 * (average of the others - s[i])
    if (negligible(denominator, T(2 * spread))) return Diverged{i};
    next.values[i] = s[i] + moment / denominator;
  }
  return next;
}

template <typename T>
IterationTrace<T> iterate(const PseudopivotState<T>& s, std::size_t n) {
  IterationTrace<T> trace;
  trace.states.push_back(s);
  trace.orders.push_back(ordering(s));
  trace.ranges.push_back(range(s));
  for (std::size_t step = 0; step < n; ++step) {
    StepResult<T> r = pseudopivot_step(trace.states.back());
    if (const auto* d = std::get_if<Diverged>(&r)) {
      trace.termination = Termination::Diverged;
      trace.diverged = *d;
      break;
    }
    auto& next = std::get<PseudopivotState<T>>(r);
    if (too_large(next)) {
      trace.termination = Termination::DigitsExceeded;
      break;
    }
    trace.orders.push_back(ordering(next));
    trace.ranges.push_back(range(next));
    trace.states.push_back(std::move(next));
  }
  return trace;
}

template <typename T>
Bifurcation classify_bifurcation(const PseudopivotState<T>& s) {
  const Ordering order = ordering(s);
  const T& lo = s[order[0]];
  const T& mid = s[order[1]];
  const T& hi = s[order[2]];
  if (!(lo < mid) || !(mid < hi)) {
    throw DegenerateStateError("bifurcation classification needs three distinct values");
  }
  const T offset = mid - T(lo + hi) / 2;
  if (negligible(offset, T(hi - lo))) return Bifurcation::AtThreshold;
  return offset > 0 ? Bifurcation::NextMin : Bifurcation::NextMax;
}

template <typename T>
std::vector<Ordering> permutation_sequence(const IterationTrace<T>& t) {
  return t.orders;
}

RangeCheck conjecture_range_check(const ExactState& s, std::size_t n) {
  const IterationTrace<Rational> exact = iterate(s, n);
  const IterationTrace<double> floating = iterate(to_floating(s), n);

  RangeCheck result;
  result.termination = exact.termination;
  for (std::size_t k = 1; k <= exact.steps(); ++k) {
    const bool grows = exact.ranges[k] > exact.ranges[k - 1];
    if (!grows && !result.first_violation) result.first_violation = k;
    if (!result.first_violation) result.holds_up_to = k;

    if (!result.floating_disagreement) {
      if (k > floating.steps()) {
        result.floating_disagreement = k;
      } else if ((floating.ranges[k] > floating.ranges[k - 1]) != grows) {
        result.floating_disagreement = k;
      }
    }
  }
  if (!result.floating_disagreement && floating.steps() != exact.steps() &&
      exact.termination != Termination::DigitsExceeded) {
    result.floating_disagreement = std::min(floating.steps(), exact.steps()) + 1;
  }
  return result;
}

RangeCheck conjecture_range_check(const FloatState& s, std::size_t n) {
  return conjecture_range_check(to_exact(s), n);
}

ExactState to_exact(const FloatState& s) {
  return ExactState{{to_rational(s[0]), to_rational(s[1]), to_rational(s[2])}};
}

FloatState to_floating(const ExactState& s) {
  return FloatState{{to_double(s[0]), to_double(s[1]), to_double(s[2])}};
}

std::string to_string(const Ordering& order) {
  std::string out;
  for (auto label : order) out.push_back(static_cast<char>('a' + label));
  return out;
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::Completed: return "completed";
    case Termination::Diverged: return "diverged";
    case Termination::DigitsExceeded: return "digits-exceeded";
  }
  return "?";
}

std::string to_string(Bifurcation b) {
  switch (b) {
    case Bifurcation::NextMin: return "next-min";
    case Bifurcation::NextMax: return "next-max";
    case Bifurcation::AtThreshold: return "at-threshold";
  }
  return "?";
}

#define PIVOTLAB_INSTANTIATE(T)                                                      \
  template T range(const PseudopivotState<T>&);                                      \
  template Ordering ordering(const PseudopivotState<T>&);                            \
  template StepResult<T> pseudopivot_step(const PseudopivotState<T>&);               \
  template IterationTrace<T> iterate(const PseudopivotState<T>&, std::size_t);       \
  template Bifurcation classify_bifurcation(const PseudopivotState<T>&);             \
  template std::vector<Ordering> permutation_sequence(const IterationTrace<T>&);

PIVOTLAB_INSTANTIATE(double)
PIVOTLAB_INSTANTIATE(Rational)

#undef PIVOTLAB_INSTANTIATE

}  // namespace pivotlab
