#include "pivotlab/app/points_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "pivotlab/errors.hpp"

namespace pivotlab::app {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_real(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace

PointFile PointFile::from_path(std::filesystem::path path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  const PointFormat format = ext == ".json" ? PointFormat::Json : PointFormat::Csv;
  return PointFile{std::move(path), format};
}

LoadedPoints load_points(const PointFile& file) {
  std::ifstream in(file.path, std::ios::binary);
  if (!in) {
    throw FormatError(0, "cannot open '" + file.path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  return file.format == PointFormat::Json ? parse_points_json(text) : parse_points_csv(text);
}

LoadedPoints parse_points_csv(std::string_view text) {
  std::vector<Point> points;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    line = trim(line);
    if (line.empty()) continue;
    if (line_no == 1 && line == "x,y") continue;

    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw FormatError(line_no, "expected exactly two comma-separated values");
    }
    const auto x = parse_real(line.substr(0, comma));
    const auto y = parse_real(line.substr(comma + 1));
    if (!x || !y) {
      throw FormatError(line_no, "'" + std::string(line) + "' is not a pair of finite reals");
    }
    points.push_back({*x, *y});
  }
  return LoadedPoints{PointSet(std::move(points)), std::nullopt};
}

LoadedPoints parse_points_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array()) {
    throw FormatError(0, "JSON needs a \"points\" array");
  }

  std::vector<Point> points;
  for (const auto& entry : doc["points"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
      throw FormatError(0, "point " + std::to_string(points.size() + 1) + " must be [x, y]");
    }
    points.push_back({entry[0].get<double>(), entry[1].get<double>()});
  }

  std::optional<Multiplicities> delta;
  if (doc.contains("delta")) {
    const auto& d = doc["delta"];
    if (!d.is_array()) throw FormatError(0, "\"delta\" must be an array");
    std::vector<std::uint64_t> values;
    for (const auto& v : d) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
        throw FormatError(0, "\"delta\" entries must be integers >= 1");
      }
      values.push_back(v.get<std::uint64_t>());
    }
    delta.emplace(std::move(values));
  }

  PointSet set(std::move(points));
  if (delta && delta->size() != set.size()) {
    throw ShapeError("\"delta\" has " + std::to_string(delta->size()) + " entries for " +
                     std::to_string(set.size()) + " points");
  }
  return LoadedPoints{std::move(set), std::move(delta)};
}

}  // namespace pivotlab::app
