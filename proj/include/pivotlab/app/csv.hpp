#pragma once

// Text output shared by the CLI: locale-independent numbers, pivot lines,
// sweep records and pseudopivot traces.

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pivotlab/geometry.hpp"
#include "pivotlab/pseudopivot.hpp"
#include "pivotlab/regions.hpp"

namespace pivotlab::app {

/// Rounded to 10 decimal places, or more below 1 so that 10 significant
/// digits remain, with trailing zeros removed ("1.6666666667", "1.5", "-2");
/// magnitudes outside [1e-4, 1e15) switch to scientific notation with 10
/// significant digits. Never prints "-0".
std::string format_number(double v);
std::string format_number(const Rational& q);

/// "label,x,y" or "label,inf".
std::string format_pivot_line(Label label, const PivotResult& pivot);

/// Header "label,k,x,y,class,violation"; k is ';'-joined, an at-infinity
/// pivot prints "inf" in both coordinate columns.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);
std::vector<SweepRecord> parse_sweep_csv(std::string_view text);

/// Header "n,a,b,c,range,permutation,mode".
template <typename T>
void write_trace_csv(std::ostream& out, const IterationTrace<T>& trace);

/// "1,2,1" -> {1, 2, 1}. Throws FormatError.
std::vector<std::uint64_t> parse_uint_list(std::string_view text);

}  // namespace pivotlab::app
