#ifndef NS1D_STATIONARY_HPP_
#define NS1D_STATIONARY_HPP_

#include "ns1d/grid.hpp"
#include "ns1d/model.hpp"

namespace ns1d {

/// Solved steady density profile.  The steady balance [P(rho_s)]_x = rho_s f
/// integrates in closed form to
///     rho_s^{gamma-1}(x) = kappa + ((gamma-1)/(A*gamma)) * F(x),
/// so the whole solve reduces to finding the scalar kappa that matches the
/// prescribed total mass.
struct StationaryDensity {
  CellField profile;     ///< rho_s at cell centers, strictly positive
  double kappa;          ///< additive constant in rho_s^{gamma-1}
  double k1;             ///< min of profile
  double k2;             ///< max of profile
  double residual_norm;  ///< discrete L2 residual of the steady balance
  double mass;           ///< midpoint-rule integral of profile

  /// Closed-form rho_s(x) for any x in [0,1] (not just the stored samples).
  double eval(double x, const ForceField& force, const FluidParams& params) const;
};

struct ExistenceCheck {
  bool holds;     ///< lhs < mass
  double lhs;     ///< feasibility integral
  double margin;  ///< mass - lhs
};

/// Feasibility of the steady problem: the integral
///   int_0^1 [((gamma-1)/(A*gamma)) * (F(x) - min F)]^{1/(gamma-1)} dx
/// must stay below the target mass for a positive solution to exist.
/// Evaluated by composite Simpson quadrature on >= 10^4 points.
ExistenceCheck existence_condition(const ForceField& force, double gamma, double mass,
                                   double A = 1.0);

/// Solve the steady problem on the given grid.  The mass constraint is the
/// grid's own midpoint quadrature of the sampled profile, so the returned
/// profile satisfies |integrate(profile) - mass| <= tol exactly in the sense
/// every other module measures mass.  Bisection on kappa is unconditionally
/// convergent because the mass functional is strictly increasing.
/// Throws InfeasibleError when existence_condition fails.
StationaryDensity solve_stationary(const ForceField& force, const FluidParams& params,
                                   double mass, const Grid& grid, double tol = 1e-12);

/// Discrete L2 residual of the steady balance over interior faces:
///   (P(rho_{i+1}) - P(rho_i))/dx - (rho_i + rho_{i+1})/2 * f(x_face).
double stationary_residual(const CellField& profile, const ForceField& force,
                           const FluidParams& params, const Grid& grid);

}  // namespace ns1d

#endif  // NS1D_STATIONARY_HPP_
