// pivotlab: pivot points of least-squares lines under datum repetition.

#include <CLI11.hpp>
#include <iostream>

#include "pivotlab/app/commands.hpp"
#include "pivotlab/app/csv.hpp"
#include "pivotlab/errors.hpp"

int main(int argc, char** argv) {
  using namespace pivotlab::app;

  CLI::App app{"pivotlab - pivot points of least-squares regression lines"};
  app.require_subcommand(1);

  PivotCommand pivot;
  std::string pivot_delta;
  auto* pivot_cmd = app.add_subcommand("pivot", "Print pivot points as label,x,y (or label,inf)");
  pivot_cmd->add_option("file", pivot.file, "CSV or JSON point file")->required();
  pivot_cmd->add_option("--label", pivot.label, "1-based label (default: every label)");
  pivot_cmd->add_option("--delta", pivot_delta, "Comma-separated multiplicities, e.g. 1,2,1");

  SweepCommand sweep;
  std::string sweep_csv, sweep_svg;
  auto* sweep_cmd = app.add_subcommand("sweep", "Classify pivots over every repetition combination");
  sweep_cmd->add_option("file", sweep.file, "CSV or JSON point file")->required();
  sweep_cmd->add_option("--kmax", sweep.k_max, "Largest repetition count per point")->capture_default_str();
  sweep_cmd->add_flag("--hull", sweep.hull, "Hull containment of the extreme-x labels (any n >= 3)");
  sweep_cmd->add_option("--tol", sweep.tol, "Classification tolerance")->capture_default_str();
  sweep_cmd->add_option("--out-csv", sweep_csv, "Write records here instead of stdout");
  sweep_cmd->add_option("--out-svg", sweep_svg, "Write a scatter plot of the pivots");

  PseudopivotCommand pseudo;
  std::vector<std::string> pseudo_values;
  std::string pseudo_csv, pseudo_svg;
  auto* pseudo_cmd = app.add_subcommand("pseudopivot", "Iterate the pseudopivot map on a triple");
  pseudo_cmd->add_option("values", pseudo_values, "Three distinct values a b c")->required()->expected(3);
  pseudo_cmd->add_option("-n,--steps", pseudo.steps, "Number of iterations")->capture_default_str();
  pseudo_cmd->add_flag("--exact", pseudo.exact, "Exact rational arithmetic");
  pseudo_cmd->add_option("--out-csv", pseudo_csv, "Write the trace here instead of stdout");
  pseudo_cmd->add_option("--out-svg", pseudo_svg, "Write iterates against n");

  VerifyCommand verify;
  std::string suite = "invariance", verify_json;
  std::uint64_t verify_kmax = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite on a point set");
  verify_cmd->add_option("file", verify.file, "CSV or JSON point file")->required();
  verify_cmd->add_option("--suite", suite, "invariance | convergence | regions")->capture_default_str();
  auto* kmax_opt = verify_cmd->add_option("--kmax", verify_kmax, "Repetition bound (50 invariance, 4 regions)");
  verify_cmd->add_option("--tol", verify.tol, "Tolerance")->capture_default_str();
  verify_cmd->add_option("--out-json", verify_json, "Write the JSON summary here");

  // Parse errors exit through CLI11 with its own code; map them to usage.
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*pivot_cmd) {
      if (!pivot_delta.empty()) pivot.delta = parse_uint_list(pivot_delta);
      return cmd_pivot(pivot, std::cout);
    }
    if (*sweep_cmd) {
      if (!sweep_csv.empty()) sweep.out_csv = sweep_csv;
      if (!sweep_svg.empty()) sweep.out_svg = sweep_svg;
      return cmd_sweep(sweep, std::cout, std::cerr);
    }
    if (*pseudo_cmd) {
      pseudo.values = {pseudo_values[0], pseudo_values[1], pseudo_values[2]};
      if (!pseudo_csv.empty()) pseudo.out_csv = pseudo_csv;
      if (!pseudo_svg.empty()) pseudo.out_svg = pseudo_svg;
      return cmd_pseudopivot(pseudo, std::cout, std::cerr);
    }
    if (*verify_cmd) {
      verify.suite = parse_suite(suite);
      if (kmax_opt->count() > 0) verify.k_max = verify_kmax;
      if (!verify_json.empty()) verify.out_json = verify_json;
      return cmd_verify(verify, std::cout);
    }
  } catch (const pivotlab::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
