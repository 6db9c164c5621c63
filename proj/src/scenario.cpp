#include "ns1d/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "ns1d/errors.hpp"

namespace ns1d {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string meta_block(const RunConfig& cfg) {
  std::ostringstream out;
  out << "# scenario: " << cfg.scenario << "\n";
  out << "# config: fnv1a=" << config_hash(cfg) << "\n";
  out << "# grid: n=" << cfg.n << " dx=" << fmt(1.0 / cfg.n) << "\n";
  return out.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);  // binary: no platform newline games
  if (!out) throw NumericalError("cannot write " + path.string());
  out << text;
}

void write_diagnostics_csv(const std::filesystem::path& path, const RunConfig& cfg,
                           const std::vector<DiagnosticRecord>& records) {
  std::ostringstream out;
  out << meta_block(cfg);
  out << diagnostic_csv_header() << "\n";
  for (const auto& rec : records) out << diagnostic_csv_row(rec) << "\n";
  write_text(path, out.str());
}

void write_stationary_csv(const std::filesystem::path& path, const RunConfig& cfg,
                          const StationaryDensity& st, const Grid& grid) {
  std::ostringstream out;
  out << meta_block(cfg);
  out << "# kappa=" << fmt(st.kappa) << " k1=" << fmt(st.k1) << " k2=" << fmt(st.k2)
      << " residual=" << fmt(st.residual_norm) << " mass=" << fmt(st.mass) << "\n";
  out << "x,rho_s\n";
  for (int i = 0; i < grid.n; ++i) {
    out << fmt(grid.cell_center(i)) << ',' << fmt(st.profile[i]) << "\n";
  }
  write_text(path, out.str());
}

void write_final_state_csv(const std::filesystem::path& path, const RunConfig& cfg,
                           const State& state, const Grid& grid) {
  std::ostringstream out;
  out << meta_block(cfg);
  out << "# t=" << fmt(state.t) << "\n";
  out << "# section: rho\n";
  out << "x_center,rho\n";
  for (int i = 0; i < grid.n; ++i) {
    out << fmt(grid.cell_center(i)) << ',' << fmt(state.rho[i]) << "\n";
  }
  out << "# section: u\n";
  out << "x_face,u\n";
  for (int j = 0; j <= grid.n; ++j) {
    out << fmt(grid.face_position(j)) << ',' << fmt(state.u[j]) << "\n";
  }
  write_text(path, out.str());
}

std::string fit_line(const char* label, const std::optional<DecayFit>& fit) {
  std::ostringstream out;
  out << label << ": ";
  if (fit) {
    out << "alpha=" << fmt(fit->alpha) << " r2=" << fmt(fit->r_squared) << " window=["
        << fmt(fit->window_start) << "," << fmt(fit->window_end) << "]";
  } else {
    out << "unavailable (fit infeasible)";
  }
  out << "\n";
  return out.str();
}

void write_summary(const std::filesystem::path& path, const RunConfig& cfg,
                   const ScenarioOutcome& outcome) {
  std::ostringstream out;
  out << "scenario: " << cfg.scenario << "\n";
  out << "config: fnv1a=" << config_hash(cfg) << "\n";
  out << "status: " << (outcome.ok ? "ok" : "aborted: " + outcome.abort_reason) << "\n";
  if (outcome.stationary_feasible) {
    const auto& st = *outcome.stationary;
    out << "stationary: feasible kappa=" << fmt(st.kappa) << " k1=" << fmt(st.k1)
        << " k2=" << fmt(st.k2) << " residual=" << fmt(st.residual_norm) << "\n";
  } else {
    out << "stationary: existence condition violated, lhs=" << fmt(outcome.existence_lhs)
        << " (needs lhs < mass = 1)\n";
  }
  out << fit_line("alpha_dev_l2", outcome.alpha_dev_l2);
  out << fit_line("alpha_u_w12", outcome.alpha_u_w12);
  out << "final_sup_rho: " << fmt(outcome.final_sup_rho) << "\n";
  out << "max_sup_rho: " << fmt(outcome.max_sup_rho) << "\n";
  out << "gradrho_trend_slope: "
      << (outcome.gradrho_slope ? fmt(*outcome.gradrho_slope) : std::string("nan")) << "\n";
  out << "records: " << outcome.records.size() << "\n";
  write_text(path, out.str());
}

}  // namespace

double linear_slope(const std::vector<std::pair<double, double>>& series,
                    std::pair<double, double> window) {
  double tm = 0.0, ym = 0.0;
  int n = 0;
  for (const auto& [t, v] : series) {
    if (t < window.first || t > window.second) continue;
    tm += t;
    ym += v;
    ++n;
  }
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  tm /= n;
  ym /= n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [t, v] : series) {
    if (t < window.first || t > window.second) continue;
    sxx += (t - tm) * (t - tm);
    sxy += (t - tm) * (v - ym);
  }
  if (sxx == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return sxy / sxx;
}

ScenarioOutcome run_scenario(const RunConfig& cfg, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);

  ScenarioOutcome outcome;
  Grid grid(cfg.n);
  FluidParams params = cfg.make_fluid_params();
  ForceField force = cfg.make_force();

  ExistenceCheck check = existence_condition(force, cfg.gamma, 1.0, cfg.A);
  outcome.existence_lhs = check.lhs;
  outcome.stationary_feasible = check.holds;
  if (check.holds) {
    outcome.stationary = solve_stationary(force, params, 1.0, grid, cfg.stationary_tol);
    write_stationary_csv(out_dir / "stationary.csv", cfg, *outcome.stationary, grid);
  }

  const StationaryDensity* st = outcome.stationary ? &*outcome.stationary : nullptr;
  try {
    InitialData initial = cfg.make_initial_data(st);
    RunResult result = run(initial, params, force, grid, cfg.make_solver_config(), cfg.t_end,
                           cfg.sample_every, st);
    outcome.records = std::move(result.records);
    outcome.ok = true;

    write_diagnostics_csv(out_dir / "diagnostics.csv", cfg, outcome.records);
    write_final_state_csv(out_dir / "final_state.csv", cfg, result.final_state, grid);

    auto window = cfg.effective_fit_window();
    std::vector<std::pair<double, double>> dev_series, uw_series, grad_series;
    for (const auto& rec : outcome.records) {
      if (rec.dev_l2) dev_series.emplace_back(rec.t, *rec.dev_l2);
      uw_series.emplace_back(rec.t, rec.u_w12);
      grad_series.emplace_back(rec.t, rec.gradrho_l2);
      outcome.max_sup_rho = std::max(outcome.max_sup_rho, rec.sup_rho);
    }
    outcome.final_sup_rho = outcome.records.back().sup_rho;
    try {
      if (!dev_series.empty()) outcome.alpha_dev_l2 = fit_decay(dev_series, window);
    } catch (const FitError&) {
    }
    try {
      outcome.alpha_u_w12 = fit_decay(uw_series, window);
    } catch (const FitError&) {
    }
    double slope = linear_slope(grad_series, window);
    if (std::isfinite(slope)) outcome.gradrho_slope = slope;
  } catch (const std::exception& e) {
    outcome.ok = false;
    outcome.abort_reason = e.what();
  }

  write_summary(out_dir / "summary.txt", cfg, outcome);
  return outcome;
}

std::vector<ConvergenceRow> convergence_study(const RunConfig& base,
                                              const std::vector<int>& resolutions,
                                              const std::filesystem::path& out_dir) {
  if (resolutions.size() < 3) {
    throw ConfigError("convergence study needs at least 3 resolutions");
  }
  for (std::size_t k = 1; k < resolutions.size(); ++k) {
    if (resolutions[k] != 2 * resolutions[k - 1]) {
      throw ConfigError("convergence study resolutions must double: " +
                        std::to_string(resolutions[k - 1]) + " -> " +
                        std::to_string(resolutions[k]));
    }
  }

  FluidParams params = base.make_fluid_params();
  ForceField force = base.make_force();

  // March the base scenario at each resolution; only the final state matters,
  // so sample as sparsely as run() allows.
  std::vector<State> finals;
  for (int n : resolutions) {
    Grid grid(n);
    const StationaryDensity* st = nullptr;
    std::optional<StationaryDensity> stat;
    if (base.rho0.kind == Rho0Kind::StationarySin) {
      stat = solve_stationary(force, params, 1.0, grid, base.stationary_tol);
      st = &*stat;
    }
    InitialData initial = base.make_initial_data(st);
    double sample = base.t_end > 0.0 ? base.t_end : 1.0;
    RunResult r = run(initial, params, force, grid, base.make_solver_config(), base.t_end,
                      sample, nullptr);
    finals.push_back(std::move(r.final_state));
  }

  // Restrict each fine solution onto the coarser grid: cell values by
  // averaging the two children, face values at the coincident faces.
  std::vector<ConvergenceRow> rows;
  double prev_err = 0.0;
  for (std::size_t k = 0; k + 1 < finals.size(); ++k) {
    const State& coarse = finals[k];
    const State& fine = finals[k + 1];
    int nc = resolutions[k];
    Grid cg(nc);

    CellField drho(static_cast<std::size_t>(nc));
    for (int i = 0; i < nc; ++i) {
      double restricted = 0.5 * (fine.rho[2 * i] + fine.rho[2 * i + 1]);
      drho[i] = coarse.rho[i] - restricted;
    }
    FaceField du(static_cast<std::size_t>(nc) + 1);
    for (int j = 0; j <= nc; ++j) du[j] = coarse.u[j] - fine.u[2 * j];

    ConvergenceRow row;
    row.n_coarse = nc;
    row.n_fine = resolutions[k + 1];
    row.err_l2 = lp_norm(drho, 2.0, cg) + lp_norm(du, 2.0, cg);
    row.order = rows.empty() ? std::numeric_limits<double>::quiet_NaN()
                             : std::log2(prev_err / row.err_l2);
    prev_err = row.err_l2;
    rows.push_back(row);
  }

  std::filesystem::create_directories(out_dir);
  std::ostringstream out;
  out << meta_block(base);
  out << "# comparison_time=" << fmt(base.t_end) << "\n";
  out << "n_coarse,n_fine,err_l2,order\n";
  for (const auto& row : rows) {
    out << row.n_coarse << ',' << row.n_fine << ',' << fmt(row.err_l2) << ',' << fmt(row.order)
        << "\n";
  }
  write_text(out_dir / "convergence.csv", out.str());
  return rows;
}

}  // namespace ns1d
