#ifndef NS1D_SCENARIO_HPP_
#define NS1D_SCENARIO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ns1d/config.hpp"
#include "ns1d/diagnostics.hpp"
#include "ns1d/solver.hpp"

namespace ns1d {

/// Everything run_scenario learned, mirrored into summary.txt.
struct ScenarioOutcome {
  bool ok = false;
  std::string abort_reason;  // empty on success

  bool stationary_feasible = false;
  double existence_lhs = 0.0;
  std::optional<StationaryDensity> stationary;

  std::vector<DiagnosticRecord> records;
  std::optional<DecayFit> alpha_dev_l2;
  std::optional<DecayFit> alpha_u_w12;
  double final_sup_rho = 0.0;
  double max_sup_rho = 0.0;
  std::optional<double> gradrho_slope;  // linear trend over the fit window
};

/// Run one configured scenario and write diagnostics.csv, stationary.csv
/// (when feasible), final_state.csv and summary.txt into out_dir.  The summary
/// is written even when the run aborts, with the abort reason.  Output is
/// byte-deterministic for a given config.
ScenarioOutcome run_scenario(const RunConfig& config, const std::filesystem::path& out_dir);

struct ConvergenceRow {
  int n_coarse = 0;
  int n_fine = 0;
  double err_l2 = 0.0;  ///< coarse-vs-restricted-fine L2 difference at t_end
  double order = 0.0;   ///< log2(previous err / this err); NaN on the first row
};

/// Self-convergence harness: run the base config at each resolution (each must
/// double the previous; at least 3), compare consecutive solutions at t_end,
/// and write convergence.csv into out_dir.
std::vector<ConvergenceRow> convergence_study(const RunConfig& base,
                                              const std::vector<int>& resolutions,
                                              const std::filesystem::path& out_dir);

/// Ordinary least-squares slope of value against t over the window
/// (the gradrho trend reported in summaries).
double linear_slope(const std::vector<std::pair<double, double>>& series,
                    std::pair<double, double> window);

}  // namespace ns1d

#endif  // NS1D_SCENARIO_HPP_
