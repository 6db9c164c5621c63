#ifndef NS1D_DIAGNOSTICS_HPP_
#define NS1D_DIAGNOSTICS_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ns1d/grid.hpp"
#include "ns1d/model.hpp"
#include "ns1d/stationary.hpp"

namespace ns1d {

struct State;  // solver.hpp

/// One time-sample of every audited functional.  The three steady-relative
/// entries are absent when no steady profile exists for the run.
struct DiagnosticRecord {
  double t = 0.0;
  double mass = 0.0;
  double sup_rho = 0.0;
  double energy = 0.0;
  double dissipation = 0.0;
  std::optional<double> lyapunov;
  std::optional<double> dev_l1;
  std::optional<double> dev_l2;
  double u_l2 = 0.0;
  double u_w12 = 0.0;
  double u_w1inf = 0.0;
  double gradrho_l2 = 0.0;
};

/// Fixed CSV column order: t, mass, sup_rho, energy, dissipation, lyapunov,
/// dev_l1, dev_l2, u_l2, u_w12, u_w1inf, gradrho_l2.
std::string diagnostic_csv_header();
std::string diagnostic_csv_row(const DiagnosticRecord& rec);

/// Least-squares exponential decay fit on a positive series.
struct DecayFit {
  double alpha = 0.0;      ///< decay rate, minus the slope of log(value) vs t
  double intercept = 0.0;  ///< log-space intercept
  double r_squared = 0.0;
  double window_start = 0.0;
  double window_end = 0.0;
};

/// Everything the functionals need besides the state itself.
struct DiagnosticContext {
  const FluidParams& params;
  const ForceField& force;
  const Grid& grid;
  const StationaryDensity* stationary = nullptr;  // may be absent
};

/// Total energy including the force potential:
///   int (1/2 rho u^2 + P(rho)/(gamma-1)) dx - int rho F dx,
/// with u interpolated to cell centers by face averaging.
double energy(const State& state, const FluidParams& params, const ForceField& force,
              const Grid& grid);

/// Instantaneous viscous dissipation int mu(rho) u_x^2 dx over cells.
double dissipation(const State& state, const FluidParams& params, const Grid& grid);

/// Relative potential G(rho; rho_s) = (P(rho) - P(rho_s) - P'(rho_s)(rho - rho_s))/(gamma-1).
/// Convex, nonnegative, zero iff rho = rho_s.  Near rho_s the closed form
/// cancels catastrophically, so small deviations switch to a Taylor form.
double g_potential(double rho, double rho_s, const FluidParams& params);

/// Lyapunov functional 1/2 int rho u^2 + int G(rho; rho_s) dx.
double lyapunov(const State& state, const StationaryDensity& rho_s,
                const FluidParams& params, const Grid& grid);

/// (||rho - rho_s||_Lp, ||u||_W1p).
std::pair<double, double> deviation_norms(const State& state, const StationaryDensity& rho_s,
                                          double p, const Grid& grid);

/// Realized-range quadratic bounds M1 (rho-rho_s)^2 <= G <= M2 (rho-rho_s)^2,
/// with M1 = min P' / (2 xi_max) and M2 = max P' / (2 xi_min) over
/// xi in [min(rho_min, k1), max(rho_max, k2)].  `holds` is evaluated in the
/// multiplied-through form so a vacuum range (xi_min = 0) stays well-defined.
struct EntropySandwich {
  double m1 = 0.0;
  double m2 = 0.0;  ///< +inf when the realized range touches vacuum
  double g_integral = 0.0;
  double dev_l2 = 0.0;
  bool holds = false;
};
EntropySandwich entropy_sandwich(const State& state, const StationaryDensity& rho_s,
                                 const FluidParams& params, const Grid& grid);

/// OLS fit of log(value) against t over [window.first, window.second].
/// Nonpositive values are excluded; fewer than 10 usable samples throws FitError.
/// A zero-variance log-series fits a constant perfectly: alpha = 0, r^2 = 1.
DecayFit fit_decay(const std::vector<std::pair<double, double>>& series,
                   std::pair<double, double> window);

/// Bundle every functional for one snapshot.
DiagnosticRecord make_record(const State& state, const DiagnosticContext& ctx);

}  // namespace ns1d

#endif  // NS1D_DIAGNOSTICS_HPP_
