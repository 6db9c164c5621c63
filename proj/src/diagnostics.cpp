#include "ns1d/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "ns1d/errors.hpp"
#include "ns1d/solver.hpp"

namespace ns1d {

namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_optional(const std::optional<double>& x) {
  return x ? format_double(*x) : "nan";
}

/// u averaged from faces to the cell centers.
CellField u_at_centers(const FaceField& u, const Grid& grid) {
  CellField out(static_cast<std::size_t>(grid.n));
  for (int i = 0; i < grid.n; ++i) out[i] = 0.5 * (u[i] + u[i + 1]);
  return out;
}

}  // namespace

std::string diagnostic_csv_header() {
  return "t,mass,sup_rho,energy,dissipation,lyapunov,dev_l1,dev_l2,u_l2,u_w12,u_w1inf,"
         "gradrho_l2";
}

std::string diagnostic_csv_row(const DiagnosticRecord& rec) {
  std::string row = format_double(rec.t);
  row += ',';
  row += format_double(rec.mass);
  row += ',';
  row += format_double(rec.sup_rho);
  row += ',';
  row += format_double(rec.energy);
  row += ',';
  row += format_double(rec.dissipation);
  row += ',';
  row += format_optional(rec.lyapunov);
  row += ',';
  row += format_optional(rec.dev_l1);
  row += ',';
  row += format_optional(rec.dev_l2);
  row += ',';
  row += format_double(rec.u_l2);
  row += ',';
  row += format_double(rec.u_w12);
  row += ',';
  row += format_double(rec.u_w1inf);
  row += ',';
  row += format_double(rec.gradrho_l2);
  return row;
}

double energy(const State& state, const FluidParams& params, const ForceField& force,
              const Grid& grid) {
  CellField uc = u_at_centers(state.u, grid);
  double sum = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    double rho = state.rho[i];
    sum += 0.5 * rho * uc[i] * uc[i] + pressure(rho, params) / (params.gamma - 1.0) -
           rho * force.primitive(grid.cell_center(i));
  }
  return grid.dx * sum;
}

double dissipation(const State& state, const FluidParams& params, const Grid& grid) {
  CellField ux = face_gradient(state.u, grid);
  double sum = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    sum += params.viscosity(state.rho[i]) * ux[i] * ux[i];
  }
  return grid.dx * sum;
}

double g_potential(double rho, double rho_s, const FluidParams& params) {
  if (!(rho_s > 0.0)) {
    throw std::domain_error("g_potential: rho_s must be strictly positive");
  }
  if (rho < 0.0) {
    throw std::domain_error("g_potential: rho must be nonnegative");
  }
  double d = rho - rho_s;
  double g = params.gamma;
  if (std::fabs(d) <= 1e-4 * rho_s) {
    // second-order Taylor with cubic correction; relative error O((d/rho_s)^2)
    double p2 = params.A * g * (g - 1.0) * std::pow(rho_s, g - 2.0);
    return 0.5 * p2 * d * d / (g - 1.0) * (1.0 + (g - 2.0) * d / (3.0 * rho_s));
  }
  return (pressure(rho, params) - pressure(rho_s, params) -
          pressure_derivative(rho_s, params) * d) /
         (g - 1.0);
}

double lyapunov(const State& state, const StationaryDensity& rho_s,
                const FluidParams& params, const Grid& grid) {
  if (rho_s.profile.size() != state.rho.size()) {
    throw std::invalid_argument("lyapunov: state and profile live on different grids");
  }
  CellField uc = u_at_centers(state.u, grid);
  double sum = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    sum += 0.5 * state.rho[i] * uc[i] * uc[i] +
           g_potential(state.rho[i], rho_s.profile[i], params);
  }
  return grid.dx * sum;
}

std::pair<double, double> deviation_norms(const State& state, const StationaryDensity& rho_s,
                                          double p, const Grid& grid) {
  CellField dev(static_cast<std::size_t>(grid.n));
  for (int i = 0; i < grid.n; ++i) dev[i] = state.rho[i] - rho_s.profile[i];
  return {lp_norm(dev, p, grid), w1p_norm(state.u, p, grid)};
}

EntropySandwich entropy_sandwich(const State& state, const StationaryDensity& rho_s,
                                 const FluidParams& params, const Grid& grid) {
  double rho_min = *std::min_element(state.rho.v.begin(), state.rho.v.end());
  double rho_max = *std::max_element(state.rho.v.begin(), state.rho.v.end());
  double xi_min = std::min(rho_min, rho_s.k1);
  double xi_max = std::max(rho_max, rho_s.k2);

  // P' is monotone in rho (gamma > 1), so range extrema sit at the endpoints.
  double pmin = pressure_derivative(xi_min, params);
  double pmax = pressure_derivative(xi_max, params);

  EntropySandwich out;
  out.m1 = pmin / (2.0 * xi_max);
  out.m2 = xi_min > 0.0 ? pmax / (2.0 * xi_min) : std::numeric_limits<double>::infinity();

  double g_sum = 0.0;
  double d2_sum = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    double d = state.rho[i] - rho_s.profile[i];
    g_sum += g_potential(state.rho[i], rho_s.profile[i], params);
    d2_sum += d * d;
  }
  out.g_integral = grid.dx * g_sum;
  double dev2 = grid.dx * d2_sum;
  out.dev_l2 = std::sqrt(dev2);

  // multiplied-through form keeps the vacuum case (xi_min = 0) finite
  bool lower_ok = out.m1 * dev2 <= out.g_integral;
  bool upper_ok = out.g_integral * (2.0 * xi_min) <= pmax * dev2;
  out.holds = lower_ok && upper_ok;
  return out;
}

DecayFit fit_decay(const std::vector<std::pair<double, double>>& series,
                   std::pair<double, double> window) {
  std::vector<double> ts;
  std::vector<double> ys;
  for (const auto& [t, v] : series) {
    if (t < window.first || t > window.second) continue;
    if (!(v > 0.0)) continue;  // excluded, not an error
    ts.push_back(t);
    ys.push_back(std::log(v));
  }
  if (ts.size() < 10) {
    throw FitError("fit_decay: only " + std::to_string(ts.size()) +
                   " positive samples in window, need at least 10");
  }

  std::size_t n = ts.size();
  double tm = 0.0, ym = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    tm += ts[k];
    ym += ys[k];
  }
  tm /= static_cast<double>(n);
  ym /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double dt = ts[k] - tm;
    double dy = ys[k] - ym;
    sxx += dt * dt;
    sxy += dt * dy;
    syy += dy * dy;
  }

  DecayFit fit;
  fit.window_start = window.first;
  fit.window_end = window.second;
  if (syy == 0.0) {
    // constant series: a flat line fits it with zero residual
    fit.alpha = 0.0;
    fit.intercept = ym;
    fit.r_squared = 1.0;
    return fit;
  }
  double slope = sxy / sxx;
  fit.alpha = -slope;
  fit.intercept = ym - slope * tm;
  double ss_res = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double r = ys[k] - (fit.intercept + slope * ts[k]);
    ss_res += r * r;
  }
  fit.r_squared = 1.0 - ss_res / syy;
  return fit;
}

DiagnosticRecord make_record(const State& state, const DiagnosticContext& ctx) {
  DiagnosticRecord rec;
  rec.t = state.t;
  rec.mass = integrate(state.rho, ctx.grid);
  rec.sup_rho = lp_norm(state.rho, std::numeric_limits<double>::infinity(), ctx.grid);
  rec.energy = energy(state, ctx.params, ctx.force, ctx.grid);
  rec.dissipation = dissipation(state, ctx.params, ctx.grid);
  rec.u_l2 = lp_norm(state.u, 2.0, ctx.grid);
  rec.u_w12 = w1p_norm(state.u, 2.0, ctx.grid);
  rec.u_w1inf = w1p_norm(state.u, std::numeric_limits<double>::infinity(), ctx.grid);
  rec.gradrho_l2 = lp_norm(cell_gradient(state.rho, ctx.grid), 2.0, ctx.grid.dx);
  if (ctx.stationary != nullptr) {
    rec.lyapunov = lyapunov(state, *ctx.stationary, ctx.params, ctx.grid);
    auto [d1, w1] = deviation_norms(state, *ctx.stationary, 1.0, ctx.grid);
    (void)w1;
    auto [d2, w2] = deviation_norms(state, *ctx.stationary, 2.0, ctx.grid);
    (void)w2;
    rec.dev_l1 = d1;
    rec.dev_l2 = d2;
  }
  return rec;
}

}  // namespace ns1d
