#pragma once

// Subcommand implementations behind the pivotlab executable. Each returns the
// process exit code (0 success, 1 verification failure) and throws
// pivotlab::Error for usage and input problems (exit code 2).

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace pivotlab::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct PivotCommand {
  std::string file;
  std::optional<std::size_t> label;  // all labels when unset
  std::optional<std::vector<std::uint64_t>> delta;
};

int cmd_pivot(const PivotCommand& cmd, std::ostream& out);

struct SweepCommand {
  std::string file;
  std::uint64_t k_max = 12;
  bool hull = false;
  double tol = 1e-9;
  std::optional<std::string> out_csv;  // stdout when unset
  std::optional<std::string> out_svg;
};

/// The summary goes to `out` when the CSV is written to a file, else to `log`.
int cmd_sweep(const SweepCommand& cmd, std::ostream& out, std::ostream& log);

struct PseudopivotCommand {
  std::array<std::string, 3> values;
  std::size_t steps = 6;
  bool exact = false;
  std::optional<std::string> out_csv;
  std::optional<std::string> out_svg;
};

int cmd_pseudopivot(const PseudopivotCommand& cmd, std::ostream& out, std::ostream& log);

enum class Suite { Invariance, Convergence, Regions };

Suite parse_suite(const std::string& name);

struct VerifyCommand {
  std::string file;
  Suite suite = Suite::Invariance;
  std::optional<std::uint64_t> k_max;  // 50 for invariance, 4 for regions
  double tol = 1e-9;
  std::optional<std::string> out_json;
};

/// Human-readable lines on `out`; the JSON summary goes to out_json.
int cmd_verify(const VerifyCommand& cmd, std::ostream& out);

}  // namespace pivotlab::app
