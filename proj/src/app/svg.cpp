#include "pivotlab/app/svg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace pivotlab::app {

namespace {

constexpr std::array<const char*, 8> kPalette{"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
                                              "#9467bd", "#8c564b", "#e377c2", "#17becf"};

double to_double_value(double v) { return v; }
double to_double_value(const Rational& q) { return to_double(q); }

const char* colour(std::size_t index) { return kPalette[index % kPalette.size()]; }

std::string num(double v) {
  std::array<char, 32> buf{};
  const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 2);
  std::string s(buf.data(), r.ptr);
  return s == "-0.00" ? "0.00" : s;
}

struct Bounds {
  double min_x = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void add(double x, double y) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }

  // 5% margin on each side; flat extents get a unit width.
  void pad() {
    auto widen = [](double& lo, double& hi) {
      if (!(hi > lo)) {
        lo -= 0.5;
        hi += 0.5;
      }
      const double m = 0.05 * (hi - lo);
      lo -= m;
      hi += m;
    };
    widen(min_x, max_x);
    widen(min_y, max_y);
  }
};

class Canvas {
 public:
  explicit Canvas(const Bounds& b) : b_(b) {}

  double sx(double x) const { return (x - b_.min_x) / (b_.max_x - b_.min_x) * kSvgWidth; }
  double sy(double y) const { return kSvgHeight - (y - b_.min_y) / (b_.max_y - b_.min_y) * kSvgHeight; }

  void open(std::ostringstream& out) const {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSvgWidth << "\" height=\""
        << kSvgHeight << "\" viewBox=\"0 0 " << kSvgWidth << ' ' << kSvgHeight << "\">\n"
        << "<rect class=\"frame\" x=\"0\" y=\"0\" width=\"" << kSvgWidth << "\" height=\""
        << kSvgHeight << "\" fill=\"white\" stroke=\"#444\"/>\n";
    if (b_.min_x < 0 && b_.max_x > 0) {
      out << "<line class=\"axis\" x1=\"" << num(sx(0)) << "\" y1=\"0\" x2=\"" << num(sx(0))
          << "\" y2=\"" << kSvgHeight << "\" stroke=\"#bbb\"/>\n";
    }
    if (b_.min_y < 0 && b_.max_y > 0) {
      out << "<line class=\"axis\" x1=\"0\" y1=\"" << num(sy(0)) << "\" x2=\"" << kSvgWidth
          << "\" y2=\"" << num(sy(0)) << "\" stroke=\"#bbb\"/>\n";
    }
  }

  const Bounds& bounds() const { return b_; }

 private:
  Bounds b_;
};

}  // namespace

std::string sweep_svg(const PointSet& points, const std::vector<SweepRecord>& records) {
  Bounds b;
  for (const Point& p : points.points()) b.add(p.x, p.y);
  for (const SweepRecord& r : records) {
    if (r.pivot.is_finite()) b.add(r.pivot.point().x, r.pivot.point().y);
  }
  b.pad();
  const Canvas c(b);

  std::ostringstream out;
  c.open(out);

  const RegressionLine line = fit_line(points);
  out << "<line class=\"regression\" x1=\"" << num(c.sx(b.min_x)) << "\" y1=\""
      << num(c.sy(line(b.min_x))) << "\" x2=\"" << num(c.sx(b.max_x)) << "\" y2=\""
      << num(c.sy(line(b.max_x))) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  for (const SweepRecord& r : records) {
    if (!r.pivot.is_finite()) continue;
    out << "<circle class=\"pivot\" data-label=\"" << r.label.value << "\" cx=\""
        << num(c.sx(r.pivot.point().x)) << "\" cy=\"" << num(c.sy(r.pivot.point().y))
        << "\" r=\"1.5\" fill=\"" << colour(r.label.index()) << "\"/>\n";
  }
  for (std::size_t j = 0; j < points.size(); ++j) {
    out << "<circle class=\"datum\" data-label=\"" << (j + 1) << "\" cx=\"" << num(c.sx(points[j].x))
        << "\" cy=\"" << num(c.sy(points[j].y)) << "\" r=\"6\" fill=\"" << colour(j)
        << "\" stroke=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

template <typename T>
std::string trace_svg(const IterationTrace<T>& trace) {
  Bounds b;
  for (std::size_t n = 0; n < trace.states.size(); ++n) {
    for (std::size_t l = 0; l < 3; ++l) {
      b.add(to_double_value(trace.states[n][l]), -static_cast<double>(n));
    }
  }
  b.pad();
  const Canvas c(b);
  const std::size_t original_max = trace.orders.front()[2];

  std::ostringstream out;
  c.open(out);
  for (std::size_t n = 0; n < trace.states.size(); ++n) {
    const double y = c.sy(-static_cast<double>(n));
    out << "<line class=\"level\" x1=\"0\" y1=\"" << num(y) << "\" x2=\"" << kSvgWidth << "\" y2=\""
        << num(y) << "\" stroke=\"#eee\"/>\n";
    for (std::size_t l = 0; l < 3; ++l) {
      out << "<circle class=\"iterate\" data-label=\"" << static_cast<char>('a' + l)
          << "\" data-n=\"" << n << "\" cx=\"" << num(c.sx(to_double_value(trace.states[n][l])))
          << "\" cy=\"" << num(y) << "\" r=\"5\" fill=\""
          << (l == original_max ? "black" : colour(l)) << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

template std::string trace_svg(const IterationTrace<double>&);
template std::string trace_svg(const IterationTrace<Rational>&);

}  // namespace pivotlab::app
