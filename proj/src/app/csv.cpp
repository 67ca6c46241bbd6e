#include "pivotlab/app/csv.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>

#include "pivotlab/errors.hpp"

namespace pivotlab::app {

namespace {

void trim_zeros(std::string& s) {
  const auto dot = s.find('.');
  if (dot == std::string::npos) return;
  const auto exp = s.find('e');
  std::string mantissa = s.substr(0, exp);
  const std::string tail = exp == std::string::npos ? "" : s.substr(exp);
  while (mantissa.back() == '0') mantissa.pop_back();
  if (mantissa.back() == '.') mantissa.pop_back();
  s = mantissa + tail;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = line.find(sep);
    out.push_back(line.substr(0, pos));
    if (pos == std::string_view::npos) break;
    line.remove_prefix(pos + 1);
  }
  return out;
}

double parse_double(std::string_view s, std::size_t line) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw FormatError(line, "bad number '" + std::string(s) + "'");
  }
  return v;
}

std::uint64_t parse_uint(std::string_view s, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw FormatError(line, "bad integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";

  std::array<char, 64> buf{};
  const double mag = std::abs(v);
  std::to_chars_result r;
  if (mag == 0.0 || (mag >= 1e-4 && mag < 1e15)) {
    // 10 decimals, widened below 1 so at least 10 significant digits survive
    int decimals = 10;
    if (mag > 0.0 && mag < 1.0) decimals = std::max(10, 9 - static_cast<int>(std::floor(std::log10(mag))));
    r = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, decimals);
  } else {
    r = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::scientific, 9);
  }
  std::string s(buf.data(), r.ptr);
  trim_zeros(s);
  if (s == "-0") s = "0";
  return s;
}

std::string format_number(const Rational& q) { return format_number(to_double(q)); }

std::string format_pivot_line(Label label, const PivotResult& pivot) {
  std::string line = std::to_string(label.value) + ",";
  if (pivot.is_at_infinity()) return line + "inf";
  return line + format_number(pivot.point().x) + "," + format_number(pivot.point().y);
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << "label,k,x,y,class,violation\n";
  for (const SweepRecord& r : records) {
    out << r.label.value << ',';
    for (std::size_t j = 0; j < r.k.size(); ++j) out << (j ? ";" : "") << r.k[j];
    if (r.pivot.is_finite()) {
      out << ',' << format_number(r.pivot.point().x) << ',' << format_number(r.pivot.point().y);
    } else {
      out << ",inf,inf";
    }
    out << ',' << to_string(r.classification) << ',' << (r.violation ? 1 : 0) << '\n';
  }
}

std::vector<SweepRecord> parse_sweep_csv(std::string_view text) {
  std::vector<SweepRecord> records;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != "label,k,x,y,class,violation") throw FormatError(1, "unexpected sweep header");
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 6) throw FormatError(line_no, "expected 6 fields");

    SweepRecord r;
    r.label = Label{parse_uint(fields[0], line_no)};
    for (auto part : split(fields[1], ';')) r.k.push_back(parse_uint(part, line_no));
    if (fields[2] == "inf") {
      r.pivot = PivotResult::at_infinity();
    } else {
      r.pivot = PivotResult::finite({parse_double(fields[2], line_no), parse_double(fields[3], line_no)});
    }
    const auto cls = parse_classification(fields[4]);
    if (!cls) throw FormatError(line_no, "unknown class '" + std::string(fields[4]) + "'");
    r.classification = *cls;
    if (fields[5] != "0" && fields[5] != "1") throw FormatError(line_no, "violation must be 0 or 1");
    r.violation = fields[5] == "1";
    records.push_back(std::move(r));
  }
  return records;
}

template <typename T>
void write_trace_csv(std::ostream& out, const IterationTrace<T>& trace) {
  const char* mode = PseudopivotState<T>::mode == ValueMode::Exact ? "exact" : "float";
  out << "n,a,b,c,range,permutation,mode\n";
  for (std::size_t n = 0; n < trace.states.size(); ++n) {
    const auto& s = trace.states[n];
    out << n << ',' << format_number(s[0]) << ',' << format_number(s[1]) << ','
        << format_number(s[2]) << ',' << format_number(trace.ranges[n]) << ','
        << to_string(trace.orders[n]) << ',' << mode << '\n';
  }
}

template void write_trace_csv(std::ostream&, const IterationTrace<double>&);
template void write_trace_csv(std::ostream&, const IterationTrace<Rational>&);

std::vector<std::uint64_t> parse_uint_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  for (auto part : split(text, ',')) out.push_back(parse_uint(part, 0));
  return out;
}

}  // namespace pivotlab::app
