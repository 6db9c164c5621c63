#include "ns1d/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ns1d/errors.hpp"

namespace ns1d {

namespace {

constexpr int kQuadIntervals = 20000;  // composite Simpson, >= 10^4 sample points

/// min of F over [0,1] by dense scan (F is continuous; closed forms are smooth
/// and table primitives are piecewise quadratic, so the nodal scan is ample).
double min_primitive(const ForceField& force) {
  double m = 0.0;  // F(0) = 0
  for (int k = 1; k <= kQuadIntervals; ++k) {
    double x = static_cast<double>(k) / kQuadIntervals;
    m = std::min(m, force.primitive(x));
  }
  return m;
}

double simpson(const std::function<double(double)>& g) {
  double sum = g(0.0) + g(1.0);
  for (int k = 1; k < kQuadIntervals; ++k) {
    double x = static_cast<double>(k) / kQuadIntervals;
    sum += (k % 2 == 1 ? 4.0 : 2.0) * g(x);
  }
  return sum / (3.0 * kQuadIntervals);
}

}  // namespace

double StationaryDensity::eval(double x, const ForceField& force,
                               const FluidParams& params) const {
  double c = (params.gamma - 1.0) / (params.A * params.gamma);
  double base = kappa + c * force.primitive(x);
  return std::pow(std::max(base, 0.0), 1.0 / (params.gamma - 1.0));
}

ExistenceCheck existence_condition(const ForceField& force, double gamma, double mass,
                                   double A) {
  double c = (gamma - 1.0) / (A * gamma);
  double fmin = min_primitive(force);
  double expo = 1.0 / (gamma - 1.0);
  double lhs = simpson([&](double x) {
    double arg = c * (force.primitive(x) - fmin);
    return std::pow(std::max(arg, 0.0), expo);
  });
  return ExistenceCheck{lhs < mass, lhs, mass - lhs};
}

StationaryDensity solve_stationary(const ForceField& force, const FluidParams& params,
                                   double mass, const Grid& grid, double tol) {
  ExistenceCheck check = existence_condition(force, params.gamma, mass, params.A);
  if (!check.holds) {
    throw InfeasibleError(
        "stationary problem infeasible: condition integral " + std::to_string(check.lhs) +
            " >= target mass " + std::to_string(mass),
        check.lhs, mass);
  }

  double c = (params.gamma - 1.0) / (params.A * params.gamma);
  double expo = 1.0 / (params.gamma - 1.0);

  CellField f_primitive(static_cast<std::size_t>(grid.n));
  for (int i = 0; i < grid.n; ++i) f_primitive[i] = force.primitive(grid.cell_center(i));

  // Midpoint-rule mass of the profile for a given kappa; the positive part
  // only matters while bracketing below the positivity threshold.
  auto grid_mass = [&](double kappa) {
    double sum = 0.0;
    for (int i = 0; i < grid.n; ++i) {
      double base = kappa + c * f_primitive[i];
      sum += std::pow(std::max(base, 0.0), expo);
    }
    return grid.dx * sum;
  };

  double kappa_min = -c * min_primitive(force);
  double lo = kappa_min + 1e-14;
  double hi = kappa_min + 10.0 * (1.0 + force.sup_norm());
  while (grid_mass(hi) < mass) {
    hi = kappa_min + 2.0 * (hi - kappa_min);
    if (!std::isfinite(hi)) {
      throw NumericalError("stationary solve: failed to bracket the mass constraint");
    }
  }

  double kappa = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    kappa = 0.5 * (lo + hi);
    double m = grid_mass(kappa);
    if (std::fabs(m - mass) <= tol) break;
    if (m < mass) {
      lo = kappa;
    } else {
      hi = kappa;
    }
    if (hi - lo <= std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(hi))) {
      kappa = 0.5 * (lo + hi);
      break;
    }
  }

  StationaryDensity out;
  out.kappa = kappa;
  out.profile = CellField(static_cast<std::size_t>(grid.n));
  for (int i = 0; i < grid.n; ++i) {
    double base = kappa + c * f_primitive[i];
    if (!(base > 0.0)) {
      throw NumericalError("stationary solve: profile not strictly positive at x = " +
                           std::to_string(grid.cell_center(i)));
    }
    out.profile[i] = std::pow(base, expo);
  }
  out.k1 = *std::min_element(out.profile.v.begin(), out.profile.v.end());
  out.k2 = *std::max_element(out.profile.v.begin(), out.profile.v.end());
  out.mass = integrate(out.profile, grid);
  out.residual_norm = stationary_residual(out.profile, force, params, grid);
  return out;
}

double stationary_residual(const CellField& profile, const ForceField& force,
                           const FluidParams& params, const Grid& grid) {
  if (profile.size() != static_cast<std::size_t>(grid.n)) {
    throw std::invalid_argument("stationary_residual: profile/grid size mismatch");
  }
  for (double r : profile.v) {
    if (!(r > 0.0)) {
      throw std::domain_error("stationary_residual: profile must be strictly positive");
    }
  }
  std::vector<double> res(static_cast<std::size_t>(grid.n) - 1);
  for (int j = 1; j < grid.n; ++j) {
    double px = (pressure(profile[j], params) - pressure(profile[j - 1], params)) / grid.dx;
    double rho_face = 0.5 * (profile[j - 1] + profile[j]);
    res[j - 1] = px - rho_face * force.eval(grid.face_position(j));
  }
  return lp_norm(res, 2.0, grid.dx);
}

}  // namespace ns1d
