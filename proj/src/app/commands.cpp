#include "pivotlab/app/commands.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "pivotlab/app/csv.hpp"
#include "pivotlab/app/points_io.hpp"
#include "pivotlab/app/svg.hpp"
#include "pivotlab/errors.hpp"
#include "pivotlab/oracle.hpp"
#include "pivotlab/pseudopivot.hpp"
#include "pivotlab/regions.hpp"

namespace pivotlab::app {

namespace {

using nlohmann::json;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << content;
}

LoadedPoints load(const std::string& file) { return load_points(PointFile::from_path(file)); }

const char* check_name(RegionCheck c) {
  switch (c) {
    case RegionCheck::FourPoint: return "four-point";
    case RegionCheck::ThreePoint: return "three-point";
    case RegionCheck::HullBound: return "hull";
  }
  return "?";
}

RegionReport run_regions(const PointSet& s, std::uint64_t k_max, bool hull, const SweepOptions& o) {
  if (hull) return hull_bound_check(s, k_max, o);
  if (s.size() == 4) return four_point_region_sweep(s, k_max, o);
  if (s.size() == 3) return three_point_line_check(s, k_max, o);
  throw UsageError("region sweeps take 3 or 4 points (got " + std::to_string(s.size()) +
                   "); use --hull for other sizes");
}

void print_report(std::ostream& out, const RegionReport& r, std::uint64_t k_max) {
  out << "check=" << check_name(r.check) << " k_max=" << k_max
      << " combinations=" << r.combinations << " evaluations=" << r.evaluations
      << " violations=" << r.violations.size() << '\n';
  for (const LabelTally& t : r.tallies) {
    out << "label " << t.label.value << ":";
    for (const auto& [cls, count] : t.counts) out << ' ' << to_string(cls) << '=' << count;
    out << '\n';
  }
  for (std::size_t v = 0; v < r.violations.size() && v < 10; ++v) {
    const auto& viol = r.violations[v];
    out << "violation: label " << viol.label.value << " k=";
    for (std::size_t j = 0; j < viol.k.size(); ++j) out << (j ? ";" : "") << viol.k[j];
    out << ' ' << viol.reason << '\n';
  }
}

json report_json(const RegionReport& r, std::uint64_t k_max) {
  json labels = json::array();
  for (const LabelTally& t : r.tallies) {
    json counts = json::object();
    for (const auto& [cls, count] : t.counts) counts[to_string(cls)] = count;
    labels.push_back({{"label", t.label.value}, {"counts", counts}, {"at_infinity", t.at_infinity}});
  }
  return {{"check", check_name(r.check)},   {"k_max", k_max},
          {"combinations", r.combinations}, {"evaluations", r.evaluations},
          {"violations", r.violations.size()}, {"labels", labels}};
}

double parse_float_value(const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  if (!text.empty() && text.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw UsageError("'" + text + "' is not a finite real");
  }
  return v;
}

template <typename T>
int run_pseudopivot(const PseudopivotState<T>& start, const PseudopivotCommand& cmd,
                    std::ostream& out, std::ostream& log) {
  if (start[0] == start[1] || start[0] == start[2] || start[1] == start[2]) {
    throw UsageError("pseudopivot values must be distinct");
  }
  if (classify_bifurcation(start) == Bifurcation::AtThreshold) {
    log << "note: the inner value equals the average of the outer two (bifurcation threshold)\n";
  }

  const IterationTrace<T> trace = iterate(start, cmd.steps);
  std::ostringstream csv;
  write_trace_csv(csv, trace);
  if (cmd.out_csv) {
    write_file(*cmd.out_csv, csv.str());
  } else {
    out << csv.str();
  }
  if (cmd.out_svg) write_file(*cmd.out_svg, trace_svg(trace));

  if (trace.termination == Termination::Diverged) {
    log << "diverged at step " << trace.steps() + 1 << ": value "
        << static_cast<char>('a' + trace.diverged->label) << " pivots at infinity\n";
  } else if (trace.termination == Termination::DigitsExceeded) {
    log << "stopped at step " << trace.steps() + 1 << ": rational size exceeds "
        << kMaxRationalBits << " bits\n";
  }
  return kExitOk;
}

}  // namespace

int cmd_pivot(const PivotCommand& cmd, std::ostream& out) {
  const LoadedPoints data = load(cmd.file);
  const PointSet& s = data.points;
  std::optional<Multiplicities> delta = data.delta;
  if (cmd.delta) delta.emplace(*cmd.delta);

  std::vector<Label> labels;
  if (cmd.label) {
    labels.push_back(Label{*cmd.label});
    s.check(labels.front());
  } else {
    labels = s.labels();
  }
  for (Label l : labels) {
    const PivotResult p = delta ? pivot_point_weighted(s, l, *delta) : pivot_point(s, l);
    out << format_pivot_line(l, p) << '\n';
  }
  return kExitOk;
}

int cmd_sweep(const SweepCommand& cmd, std::ostream& out, std::ostream& log) {
  const LoadedPoints data = load(cmd.file);
  SweepOptions options;
  options.tol = cmd.tol;
  options.keep_records = true;
  const RegionReport report = run_regions(data.points, cmd.k_max, cmd.hull, options);

  std::ostringstream csv;
  write_sweep_csv(csv, report.records);
  if (cmd.out_csv) {
    write_file(*cmd.out_csv, csv.str());
  } else {
    out << csv.str();
  }
  if (cmd.out_svg) write_file(*cmd.out_svg, sweep_svg(data.points, report.records));

  print_report(cmd.out_csv ? out : log, report, cmd.k_max);
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_pseudopivot(const PseudopivotCommand& cmd, std::ostream& out, std::ostream& log) {
  if (cmd.exact) {
    ExactState s{{parse_rational(cmd.values[0]), parse_rational(cmd.values[1]),
                  parse_rational(cmd.values[2])}};
    return run_pseudopivot(s, cmd, out, log);
  }
  FloatState s{{parse_float_value(cmd.values[0]), parse_float_value(cmd.values[1]),
                parse_float_value(cmd.values[2])}};
  return run_pseudopivot(s, cmd, out, log);
}

Suite parse_suite(const std::string& name) {
  if (name == "invariance") return Suite::Invariance;
  if (name == "convergence") return Suite::Convergence;
  if (name == "regions") return Suite::Regions;
  throw UsageError("unknown suite '" + name + "' (invariance, convergence, regions)");
}

int cmd_verify(const VerifyCommand& cmd, std::ostream& out) {
  const LoadedPoints data = load(cmd.file);
  const PointSet& s = data.points;
  bool passed = true;
  json summary;

  switch (cmd.suite) {
    case Suite::Invariance: {
      const std::uint64_t k_max = cmd.k_max.value_or(50);
      json checks = json::array();
      for (Label l : s.labels()) {
        const InvarianceReport r = verify_pivot_invariance(s, l, k_max, cmd.tol);
        passed = passed && r.verdict != Verdict::Fail;
        out << "invariance label " << l.value << ": " << to_string(r.verdict);
        if (r.verdict != Verdict::NotApplicable) {
          out << " max_distance=" << format_number(r.max_distance)
              << " threshold=" << format_number(r.threshold);
        }
        out << '\n';
        checks.push_back({{"label", l.value},
                          {"verdict", to_string(r.verdict)},
                          {"max_distance", r.max_distance},
                          {"threshold", r.threshold}});
      }
      summary = {{"suite", "invariance"}, {"k_max", k_max}, {"tol", cmd.tol}, {"checks", checks}};
      break;
    }
    case Suite::Convergence: {
      const auto schedule = default_convergence_schedule();
      json checks = json::array();
      for (Label r : s.labels()) {
        for (Label i : s.labels()) {
          if (i == r) continue;
          const ConvergenceReport rep = verify_convergence(s, r, i, schedule);
          passed = passed && rep.verdict == Verdict::Pass;
          const auto& last = rep.distances.back();
          out << "convergence repeat " << r.value << " follow " << i.value << ": "
              << to_string(rep.verdict)
              << " final_distance=" << (last ? format_number(*last) : std::string("inf"))
              << " threshold=" << format_number(rep.limit_threshold) << '\n';
          checks.push_back({{"repeated", r.value},
                            {"followed", i.value},
                            {"verdict", to_string(rep.verdict)},
                            {"final_distance", last ? json(*last) : json(nullptr)},
                            {"threshold", rep.limit_threshold}});
        }
      }
      summary = {{"suite", "convergence"}, {"schedule", schedule}, {"checks", checks}};
      break;
    }
    case Suite::Regions: {
      const std::uint64_t k_max = cmd.k_max.value_or(4);
      SweepOptions options;
      options.tol = cmd.tol;
      const RegionReport r = run_regions(s, k_max, s.size() > 4, options);
      passed = r.passed();
      print_report(out, r, k_max);
      summary = {{"suite", "regions"}, {"report", report_json(r, k_max)}};
      break;
    }
  }

  summary["passed"] = passed;
  out << (passed ? "PASS" : "FAIL") << '\n';
  if (cmd.out_json) write_file(*cmd.out_json, summary.dump(2) + "\n");
  return passed ? kExitOk : kExitVerificationFailed;
}

}  // namespace pivotlab::app
