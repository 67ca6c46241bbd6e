#pragma once

// Static SVG figures (800x600, axes fitted to the data with a 5% margin).

#include <string>
#include <vector>

#include "pivotlab/geometry.hpp"
#include "pivotlab/pseudopivot.hpp"
#include "pivotlab/regions.hpp"

namespace pivotlab::app {

inline constexpr double kSvgWidth = 800.0;
inline constexpr double kSvgHeight = 600.0;

/// Data points, their regression line, and one <circle class="pivot"> per
/// finite record, coloured by the record's label. At-infinity records are
/// skipped.
std::string sweep_svg(const PointSet& points, const std::vector<SweepRecord>& records);

/// Iterates against n (n grows downwards), one <circle class="iterate"> per
/// value and state. The originally largest value is drawn in black.
template <typename T>
std::string trace_svg(const IterationTrace<T>& trace);

}  // namespace pivotlab::app
