#pragma once

#include <filesystem>
#include <optional>
#include <string_view>

#include "pivotlab/geometry.hpp"

namespace pivotlab::app {

enum class PointFormat { Csv, Json };

struct PointFile {
  std::filesystem::path path;
  PointFormat format = PointFormat::Csv;

  /// ".json" (any case) selects JSON, everything else CSV.
  static PointFile from_path(std::filesystem::path path);
};

struct LoadedPoints {
  PointSet points;
  std::optional<Multiplicities> delta;
};

/// Labels follow file order starting at 1. Throws FormatError (with the
/// offending line for CSV), ShapeError for fewer than 2 points and
/// DegenerateXError when every x coincides.
LoadedPoints load_points(const PointFile& file);

/// One "x,y" pair per line, optional "x,y" header, blank lines ignored.
LoadedPoints parse_points_csv(std::string_view text);

/// {"points": [[x, y], ...], "delta": [d1, ...]} with "delta" optional.
LoadedPoints parse_points_json(std::string_view text);

}  // namespace pivotlab::app
