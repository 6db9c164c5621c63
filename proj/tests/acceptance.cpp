// Acceptance suite: runs the packaged presets end to end and checks every
// promised property at its stated tolerance, one PASS/FAIL line each.
//
//   acceptance <presets_dir> <output_dir>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ns1d/config.hpp"
#include "ns1d/diagnostics.hpp"
#include "ns1d/errors.hpp"
#include "ns1d/scenario.hpp"
#include "ns1d/solver.hpp"

using namespace ns1d;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void record(const std::string& name, bool pass, const std::string& qoi = "") {
  std::printf("[%s] %s%s%s\n", pass ? "PASS" : "FAIL", name.c_str(), qoi.empty() ? "" : "  ",
              qoi.c_str());
  if (!pass) ++g_failures;
}

std::string qoi(double value, double threshold) {
  std::ostringstream ss;
  ss.precision(3);
  ss << std::scientific << "(val=" << value << ", thr=" << threshold << ")";
  return ss.str();
}

/// One preset marched manually so state-level checks (entropy sandwich,
/// sampled vacuum minima) ride along with the records.
struct PresetRun {
  std::vector<DiagnosticRecord> records;
  std::optional<StationaryDensity> stationary;
  int sandwich_violations = 0;
  double worst_mass_dev = 0.0;
  double min_rho_sampled = 0.0;
  bool completed = false;
  std::string failure;
};

PresetRun march(RunConfig cfg, double t_end, int n_override = 0) {
  if (n_override > 0) cfg.n = n_override;
  cfg.t_end = t_end;

  PresetRun out;
  try {
    Grid grid(cfg.n);
    FluidParams params = cfg.make_fluid_params();
    ForceField force = cfg.make_force();
    ExistenceCheck check = existence_condition(force, cfg.gamma, 1.0, cfg.A);
    if (check.holds) {
      out.stationary = solve_stationary(force, params, 1.0, grid, cfg.stationary_tol);
    }
    const StationaryDensity* st = out.stationary ? &*out.stationary : nullptr;
    DiagnosticContext ctx{params, force, grid, st};
    SolverConfig scfg = cfg.make_solver_config();

    State s = init_state(cfg.make_initial_data(st), grid);
    out.min_rho_sampled = *std::min_element(s.rho.v.begin(), s.rho.v.end());

    auto sample = [&](const State& state) {
      out.records.push_back(make_record(state, ctx));
      out.worst_mass_dev = std::max(out.worst_mass_dev,
                                    std::fabs(out.records.back().mass - 1.0));
      double mn = *std::min_element(state.rho.v.begin(), state.rho.v.end());
      out.min_rho_sampled = std::min(out.min_rho_sampled, mn);
      if (st != nullptr) {
        auto sw = entropy_sandwich(state, *st, params, grid);
        if (!sw.holds) ++out.sandwich_violations;
      }
    };

    sample(s);
    long k = 1;
    while (s.t < cfg.t_end) {
      double next_event = std::min(cfg.sample_every * static_cast<double>(k), cfg.t_end);
      while (s.t < next_event) {
        double dt = std::min(compute_dt(s, scfg, params, grid), next_event - s.t);
        s = step(s, dt, params, force, grid, scfg);
      }
      s.t = next_event;
      sample(s);
      if (next_event >= cfg.t_end) break;
      ++k;
    }
    out.completed = true;
  } catch (const std::exception& e) {
    out.failure = e.what();
  }
  return out;
}

const DiagnosticRecord* at_time(const PresetRun& run, double t) {
  for (const auto& rec : run.records) {
    if (std::fabs(rec.t - t) < 1e-9) return &rec;
  }
  return nullptr;
}

std::vector<std::pair<double, double>> series_of(const PresetRun& run,
                                                 double (*pick)(const DiagnosticRecord&)) {
  std::vector<std::pair<double, double>> out;
  for (const auto& rec : run.records) out.emplace_back(rec.t, pick(rec));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  fs::path presets = argc > 1 ? argv[1] : "presets";
  fs::path outdir = argc > 2 ? argv[2] : "acceptance_out";
  fs::create_directories(outdir);

  std::map<std::string, RunConfig> cfg;
  for (const char* name : {"relax", "vacuum-blowup", "vacuum-control", "smooth"}) {
    cfg.emplace(name, load_config((presets / (std::string(name) + ".cfg")).string()));
  }

  std::printf("== packaged presets to t=50 ==\n");
  std::map<std::string, PresetRun> runs;
  for (auto& [name, c] : cfg) {
    runs.emplace(name, march(c, 50.0));
  }

  // 1. mass conservation on every packaged scenario
  {
    double worst = 0.0;
    bool all_completed = true;
    for (auto& [name, run] : runs) {
      worst = std::max(worst, run.worst_mass_dev);
      all_completed = all_completed && run.completed;
    }
    record("1. mass conservation |mass-1| <= 1e-10 on all presets to t=50",
           all_completed && worst <= 1e-10, qoi(worst, 1e-10));
  }

  // 2. steady-profile oracle: gamma=2, f=1
  {
    Grid grid(200);
    FluidParams params{2.0, 1.0, ViscosityLaw::constant(1.0)};
    ForceField force = ForceField::constant(1.0);
    auto check = existence_condition(force, 2.0, 1.0);
    record("2a. existence integral = 0.25 +- 1e-6",
           std::fabs(check.lhs - 0.25) <= 1e-6, qoi(std::fabs(check.lhs - 0.25), 1e-6));
    auto st = solve_stationary(force, params, 1.0, grid);
    record("2b. kappa = 0.75 +- 1e-10", std::fabs(st.kappa - 0.75) <= 1e-10,
           qoi(std::fabs(st.kappa - 0.75), 1e-10));
    double nodal = 0.0;
    for (int i = 0; i < grid.n; ++i) {
      nodal = std::max(nodal,
                       std::fabs(st.profile[i] - (0.75 + 0.5 * grid.cell_center(i))));
    }
    record("2c. max nodal error of rho_s <= 1e-10", nodal <= 1e-10, qoi(nodal, 1e-10));
  }

  // 3. uniform density bound on relax to t=100, two grids
  {
    std::printf("== relax to t=100 at n in {100, 200} ==\n");
    double overall[2];
    bool late_ok = true;
    int idx = 0;
    for (int n : {100, 200}) {
      PresetRun run = march(cfg.at("relax"), 100.0, n);
      double early = 0.0, late = 0.0, all = 0.0;
      for (const auto& rec : run.records) {
        all = std::max(all, rec.sup_rho);
        (rec.t <= 50.0 ? early : late) = std::max(rec.t <= 50.0 ? early : late, rec.sup_rho);
      }
      late_ok = late_ok && run.completed && (late <= 1.01 * early);
      overall[idx++] = all;
    }
    record("3a. no late density growth (max sup_rho on [50,100] < 1.01x max on [0,50])",
           late_ok);
    double spread = std::fabs(overall[0] - overall[1]) / std::max(overall[0], overall[1]);
    record("3b. overall max sup_rho grid-stable within 5%", spread <= 0.05,
           qoi(spread, 0.05));
  }

  // 4. velocity decay on relax
  {
    const PresetRun& relax = runs.at("relax");
    double uw_max = 0.0;
    for (const auto& rec : relax.records) uw_max = std::max(uw_max, rec.u_w12);
    const auto* final_rec = at_time(relax, 50.0);
    double ratio = final_rec->u_w12 / uw_max;
    record("4a. u_w12(50) below 1e-3 of its running maximum", ratio <= 1e-3,
           qoi(ratio, 1e-3));
    auto fit = fit_decay(series_of(relax, [](const DiagnosticRecord& r) { return r.u_l2; }),
                         {10.0, 50.0});
    record("4b. fit_decay(u_l2, [10,50]): alpha > 0, r2 >= 0.95",
           fit.alpha > 0.0 && fit.r_squared >= 0.95,
           "(alpha=" + std::to_string(fit.alpha) + ", r2=" + std::to_string(fit.r_squared) +
               ")");
  }

  // 5. exponential convergence rate, stable under refinement
  {
    std::printf("== relax at n=400 to t=50 ==\n");
    PresetRun fine = march(cfg.at("relax"), 50.0, 400);
    auto pick = [](const DiagnosticRecord& r) { return *r.dev_l2; };
    auto f200 = fit_decay(series_of(runs.at("relax"), pick), {10.0, 50.0});
    auto f400 = fit_decay(series_of(fine, pick), {10.0, 50.0});
    record("5a. fit_decay(dev_l2, [10,50]) at n=200: alpha > 0, r2 >= 0.95",
           f200.alpha > 0.0 && f200.r_squared >= 0.95,
           "(alpha=" + std::to_string(f200.alpha) + ", r2=" + std::to_string(f200.r_squared) +
               ")");
    record("5b. same at n=400", f400.alpha > 0.0 && f400.r_squared >= 0.95,
           "(alpha=" + std::to_string(f400.alpha) + ", r2=" + std::to_string(f400.r_squared) +
               ")");
    double drift = std::fabs(f200.alpha - f400.alpha) / std::fabs(f400.alpha);
    record("5c. fitted alpha stable within 20% between n=200 and n=400", drift <= 0.20,
           qoi(drift, 0.20));
  }

  // 6. Lyapunov dissipation
  {
    // monotone across consecutive records, with an allowance of 1e-8*L0 per
    // elapsed step
    RunConfig c = cfg.at("relax");
    Grid grid(c.n);
    FluidParams params = c.make_fluid_params();
    ForceField force = c.make_force();
    auto st = solve_stationary(force, params, 1.0, grid, c.stationary_tol);
    State s = init_state(c.make_initial_data(&st), grid);
    SolverConfig scfg = c.make_solver_config();
    double l0 = lyapunov(s, st, params, grid);
    double l_prev = l0;
    double worst_excess = -std::numeric_limits<double>::infinity();
    long k = 1;
    while (s.t < 50.0) {
      double next_event = std::min(c.sample_every * static_cast<double>(k), 50.0);
      long steps = 0;
      while (s.t < next_event) {
        double dt = std::min(compute_dt(s, scfg, params, grid), next_event - s.t);
        s = step(s, dt, params, force, grid, scfg);
        ++steps;
      }
      s.t = next_event;
      double l = lyapunov(s, st, params, grid);
      worst_excess = std::max(worst_excess,
                              (l - l_prev) - 1e-8 * l0 * static_cast<double>(steps));
      l_prev = l;
      ++k;
    }
    record("6a. lyapunov non-increasing across records (tol 1e-8*L0 per step)",
           worst_excess <= 0.0,
           "(worst excess=" + std::to_string(worst_excess) + ")");

    // |dE + dt*D| per step shrinks >= 2x when n and 1/dt both double
    auto worst_balance = [&](int n, double dt) {
      Grid g2(n);
      SolverConfig sc = c.make_solver_config();
      sc.dt_max = dt;
      auto st2 = solve_stationary(force, params, 1.0, g2, c.stationary_tol);
      State s2 = init_state(c.make_initial_data(&st2), g2);
      double w = 0.0;
      while (s2.t < 2.0) {
        double e0 = energy(s2, params, force, g2);
        s2 = step(s2, dt, params, force, g2, sc);
        double resid = energy(s2, params, force, g2) - e0 + dt * dissipation(s2, params, g2);
        w = std::max(w, std::fabs(resid));
      }
      return w;
    };
    double coarse = worst_balance(100, 4e-4);
    double fine = worst_balance(200, 2e-4);
    record("6b. per-step |dE + dt*dissipation| shrinks >= 2x under (n, 1/dt) doubling",
           coarse / fine >= 2.0, "(ratio=" + std::to_string(coarse / fine) + ")");
  }

  // 7. quadratic entropy sandwich on every record of every preset
  {
    int violations = 0;
    int checked = 0;
    for (auto& [name, run] : runs) {
      if (!run.stationary) continue;
      violations += run.sandwich_violations;
      checked += static_cast<int>(run.records.size());
    }
    record("7. realized-range M1/M2 sandwich holds on every record (all presets)",
           violations == 0 && checked > 0,
           "(violations=" + std::to_string(violations) + "/" + std::to_string(checked) + ")");
  }

  // 8. gradient blow-up under initial vacuum vs vacuum-free control
  {
    const PresetRun& coarse = runs.at("vacuum-blowup");
    std::printf("== vacuum-blowup at n=400 to t=50 ==\n");
    PresetRun fine = march(cfg.at("vacuum-blowup"), 50.0, 400);
    double c5 = at_time(coarse, 5.0)->gradrho_l2;
    double c40 = at_time(coarse, 40.0)->gradrho_l2;
    double f5 = at_time(fine, 5.0)->gradrho_l2;
    double f40 = at_time(fine, 40.0)->gradrho_l2;
    record("8a. gradrho_l2(40) > gradrho_l2(5) under initial vacuum", c40 > c5,
           "(grad5=" + std::to_string(c5) + ", grad40=" + std::to_string(c40) + ")");
    record("8b. growth ratio increases when n doubles", f40 / f5 > c40 / c5,
           "(n200=" + std::to_string(c40 / c5) + ", n400=" + std::to_string(f40 / f5) + ")");

    const PresetRun& control = runs.at("vacuum-control");
    double g0 = control.records.front().gradrho_l2;
    double lo = g0, hi = g0;
    for (const auto& rec : control.records) {
      lo = std::min(lo, rec.gradrho_l2);
      hi = std::max(hi, rec.gradrho_l2);
    }
    record("8c. vacuum-free control keeps gradrho_l2 within 2x of its initial value",
           hi <= 2.0 * g0 && lo >= 0.5 * g0,
           "(min/initial=" + std::to_string(lo / g0) + ", max/initial=" +
               std::to_string(hi / g0) + ")");
  }

  // 9. vacuum robustness
  {
    const PresetRun& blow = runs.at("vacuum-blowup");
    bool finite = true;
    for (const auto& rec : blow.records) {
      finite = finite && std::isfinite(rec.sup_rho) && std::isfinite(rec.u_w1inf);
    }
    record("9. vacuum preset completes t=50: no pivot failure, no NaN, rho >= 0",
           blow.completed && finite && blow.min_rho_sampled >= 0.0,
           blow.completed ? "(min rho sampled=" + std::to_string(blow.min_rho_sampled) + ")"
                          : "(" + blow.failure + ")");
  }

  // 10. self-convergence order on the smooth preset
  {
    std::printf("== convergence study on smooth preset ==\n");
    auto rows = convergence_study(cfg.at("smooth"), {50, 100, 200, 400},
                                  outdir / "smooth_convergence");
    bool ok = !rows.empty();
    double min_order = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < rows.size(); ++k) min_order = std::min(min_order, rows[k].order);
    ok = ok && min_order >= 0.9;
    record("10. self-convergence order >= 0.9 across n in {50,100,200,400}", ok,
           qoi(min_order, 0.9));
  }

  // 11. compatibility residual oracle
  {
    Grid grid(200);
    FluidParams params{2.0, 1.0, ViscosityLaw::constant(1.0)};
    InitialData init;
    init.rho0 = [](double) { return 1.0; };
    init.u0 = [](double x) { return std::sin(std::numbers::pi * x); };
    init.normalize_mass = true;
    State s0 = init_state(init, grid);
    auto res = compatibility_residual(s0, params, grid, 1e-8);
    double expected = 6.9788641996388795;  // pi^2/sqrt(2)
    double rel = std::fabs(res.residual - expected) / expected;
    record("11. compatibility residual = pi^2/sqrt(2) within 2% at n=200", rel <= 0.02,
           qoi(rel, 0.02));
  }

  std::printf("\n%d criterion check(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
