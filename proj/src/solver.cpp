#include "ns1d/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ns1d/errors.hpp"

namespace ns1d {

namespace {

void require_finite(const State& state) {
  for (double r : state.rho.v) {
    if (!std::isfinite(r)) {
      throw NumericalError("non-finite density at t = " + std::to_string(state.t));
    }
  }
  for (double u : state.u.v) {
    if (!std::isfinite(u)) {
      throw NumericalError("non-finite velocity at t = " + std::to_string(state.t));
    }
  }
}

}  // namespace

State init_state(const InitialData& data, const Grid& grid) {
  State s;
  s.t = 0.0;
  s.rho = CellField(static_cast<std::size_t>(grid.n));
  double u_scale = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    double x = grid.cell_center(i);
    double r = data.rho0(x);
    if (r < 0.0) {
      throw std::invalid_argument("initial density negative at x = " + std::to_string(x));
    }
    s.rho[i] = r;
  }

  s.u = FaceField(static_cast<std::size_t>(grid.n) + 1);
  for (int j = 0; j <= grid.n; ++j) {
    s.u[j] = data.u0(grid.face_position(j));
    u_scale = std::max(u_scale, std::fabs(s.u[j]));
  }
  // the endpoint values must vanish; tolerate only evaluation roundoff
  // (sin(pi*1.0) is ~1e-16, not 0), then pin exactly
  double tol = 1e-12 * (1.0 + u_scale);
  if (std::fabs(s.u[0]) > tol || std::fabs(s.u[grid.n]) > tol) {
    throw std::invalid_argument("initial velocity must vanish at both endpoints (u0(0) = " +
                                std::to_string(s.u[0]) + ", u0(1) = " +
                                std::to_string(s.u[grid.n]) + ")");
  }
  s.u[0] = 0.0;
  s.u[grid.n] = 0.0;

  if (data.normalize_mass) {
    double m = integrate(s.rho, grid);
    if (!(m > 0.0)) {
      throw std::invalid_argument("initial density has zero mass, cannot normalize");
    }
    double scale = 1.0 / m;
    for (double& r : s.rho.v) r *= scale;
  }
  return s;
}

CompatResult compatibility_residual(const State& state0, const FluidParams& params,
                                    const Grid& grid, double threshold) {
  const int n = grid.n;
  const double dx = grid.dx;

  // s_i = mu(rho_i) * (u_x)_i at cells, then d/dx by central differences
  // (one-sided at the two boundary cells); same stencil for P_x.
  CellField ux = face_gradient(state0.u, grid);
  std::vector<double> s(static_cast<std::size_t>(n));
  std::vector<double> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    s[i] = params.viscosity(state0.rho[i]) * ux[i];
    p[i] = pressure(state0.rho[i], params);
  }

  auto ddx = [&](const std::vector<double>& w, int i) {
    if (i == 0) return (w[1] - w[0]) / dx;
    if (i == n - 1) return (w[n - 1] - w[n - 2]) / dx;
    return (w[i + 1] - w[i - 1]) / (2.0 * dx);
  };

  CompatResult out;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    if (state0.rho[i] <= threshold) {
      ++out.excluded_cells;
      continue;
    }
    double g = (ddx(s, i) - ddx(p, i)) / std::sqrt(state0.rho[i]);
    sum += g * g;
    ++out.used_cells;
  }
  if (out.used_cells == 0) {
    throw std::domain_error("compatibility residual: every cell is at or below the "
                            "vacuum threshold");
  }
  out.residual = std::sqrt(dx * sum);
  return out;
}

double compute_dt(const State& state, const SolverConfig& config, const FluidParams& params,
                  const Grid& grid) {
  double speed = 0.0;
  for (int j = 0; j <= grid.n; ++j) {
    double rho_face;
    if (j == 0) {
      rho_face = state.rho[0];
    } else if (j == grid.n) {
      rho_face = state.rho[grid.n - 1];
    } else {
      rho_face = 0.5 * (state.rho[j - 1] + state.rho[j]);
    }
    speed = std::max(speed, std::fabs(state.u[j]) + sound_speed(rho_face, params));
  }
  if (speed == 0.0) return config.dt_max;
  return std::min(config.dt_max, config.cfl * grid.dx / speed);
}

std::vector<double> tridiagonal_solve(const std::vector<double>& lower,
                                      const std::vector<double>& diag,
                                      const std::vector<double>& upper,
                                      const std::vector<double>& rhs) {
  const std::size_t n = diag.size();
  if (lower.size() != n - 1 || upper.size() != n - 1 || rhs.size() != n) {
    throw std::invalid_argument("tridiagonal_solve: inconsistent band lengths");
  }
  std::vector<double> c(n - 1);
  std::vector<double> d(n);
  double pivot = diag[0];
  if (pivot == 0.0) throw NumericalError("tridiagonal_solve: zero pivot at row 0");
  if (n > 1) c[0] = upper[0] / pivot;
  d[0] = rhs[0] / pivot;
  for (std::size_t k = 1; k < n; ++k) {
    pivot = diag[k] - lower[k - 1] * c[k - 1];
    if (pivot == 0.0) {
      throw NumericalError("tridiagonal_solve: zero pivot at row " + std::to_string(k));
    }
    if (k < n - 1) c[k] = upper[k] / pivot;
    d[k] = (rhs[k] - lower[k - 1] * d[k - 1]) / pivot;
  }
  for (std::size_t k = n - 1; k-- > 0;) {
    d[k] -= c[k] * d[k + 1];
  }
  return d;
}

State step(const State& state, double dt, const FluidParams& params, const ForceField& force,
           const Grid& grid, const SolverConfig& config) {
  if (config.theta_visc != 1.0) {
    throw std::invalid_argument("step: only the backward-Euler viscous weight (1) is supported");
  }
  const int n = grid.n;
  const double dx = grid.dx;
  const double r = dt / dx;

  // (a) continuity: conservative upwind with zero flux through the walls
  std::vector<double> flux(static_cast<std::size_t>(n) + 1, 0.0);
  for (int j = 1; j < n; ++j) {
    double uj = state.u[j];
    flux[j] = uj * (uj >= 0.0 ? state.rho[j - 1] : state.rho[j]);
  }
  CellField rho_new(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rho_new[i] = state.rho[i] - r * (flux[i + 1] - flux[i]);
    if (rho_new[i] < 0.0) {
      // cannot happen under the advective CFL: the update is a convex combination
      throw NumericalError("density positivity lost at x = " +
                           std::to_string(grid.cell_center(i)) + ", t = " +
                           std::to_string(state.t) + " (CFL too aggressive?)");
    }
    if (rho_new[i] < config.vacuum_floor) rho_new[i] = config.vacuum_floor;
  }

  // (b) momentum: assemble the tridiagonal system over all n+1 faces with
  // Dirichlet rows at the walls
  std::vector<double> mu(static_cast<std::size_t>(n));
  std::vector<double> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    mu[i] = params.viscosity(rho_new[i]);
    p[i] = pressure(rho_new[i], params);
  }

  std::vector<double> lower(static_cast<std::size_t>(n), 0.0);
  std::vector<double> diag(static_cast<std::size_t>(n) + 1, 1.0);
  std::vector<double> upper(static_cast<std::size_t>(n), 0.0);
  std::vector<double> rhs(static_cast<std::size_t>(n) + 1, 0.0);

  const double idx2 = 1.0 / (dx * dx);
  for (int j = 1; j < n; ++j) {
    double m = 0.5 * (rho_new[j - 1] + rho_new[j]);

    // explicit upwind transport of momentum at the face
    double du;
    if (state.u[j] > 0.0) {
      du = (state.u[j] - state.u[j - 1]) / dx;
    } else if (state.u[j] < 0.0) {
      du = (state.u[j + 1] - state.u[j]) / dx;
    } else {
      du = 0.0;
    }
    double adv = m * state.u[j] * du;
    double px = (p[j] - p[j - 1]) / dx;

    lower[j - 1] = -mu[j - 1] * idx2;
    diag[j] = m / dt + (mu[j - 1] + mu[j]) * idx2;
    upper[j] = -mu[j] * idx2;
    rhs[j] = m * state.u[j] / dt - adv - px + m * force.eval(grid.face_position(j));
  }
  // rows 0 and n stay as identity * u = 0

  std::vector<double> u_new = tridiagonal_solve(lower, diag, upper, rhs);

  State out;
  out.t = state.t + dt;
  out.rho = std::move(rho_new);
  out.u = FaceField();
  out.u.v = std::move(u_new);
  out.u[0] = 0.0;
  out.u[n] = 0.0;
  return out;
}

RunResult run(const InitialData& initial, const FluidParams& params, const ForceField& force,
              const Grid& grid, const SolverConfig& config, double t_end, double sample_every,
              const StationaryDensity* stationary) {
  if (t_end < 0.0) {
    throw std::invalid_argument("run: t_end must be nonnegative");
  }
  if (!(sample_every > 0.0)) {
    throw std::invalid_argument("run: sample_every must be positive");
  }

  DiagnosticContext ctx{params, force, grid, stationary};
  RunResult result;
  result.final_state = init_state(initial, grid);
  result.records.push_back(make_record(result.final_state, ctx));

  State& state = result.final_state;
  long sample_index = 1;
  while (state.t < t_end) {
    double next_sample = sample_every * static_cast<double>(sample_index);
    double next_event = std::min(next_sample, t_end);

    double dt = compute_dt(state, config, params, grid);
    bool lands_on_event = false;
    if (state.t + dt >= next_event) {
      dt = next_event - state.t;
      lands_on_event = true;
    }
    if (!(dt > 0.0)) {
      throw NumericalError("run: nonpositive time step at t = " + std::to_string(state.t));
    }

    state = step(state, dt, params, force, grid, config);
    if (lands_on_event) state.t = next_event;  // avoid drift from accumulated roundoff
    require_finite(state);

    if (lands_on_event) {
      result.records.push_back(make_record(state, ctx));
      if (next_event == next_sample) ++sample_index;
    }
  }
  return result;
}

}  // namespace ns1d
