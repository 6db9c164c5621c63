#ifndef NS1D_SOLVER_HPP_
#define NS1D_SOLVER_HPP_

#include <functional>
#include <vector>

#include "ns1d/diagnostics.hpp"
#include "ns1d/grid.hpp"
#include "ns1d/model.hpp"
#include "ns1d/stationary.hpp"

namespace ns1d {

/// Discrete solution pair at one time: rho on cells (vacuum admitted),
/// u on faces with the no-slip endpoints pinned to zero.
struct State {
  double t = 0.0;
  CellField rho;
  FaceField u;
};

/// Initial data as evaluatable profiles; init_state samples and validates them.
struct InitialData {
  std::function<double(double)> rho0;
  std::function<double(double)> u0;
  bool normalize_mass = true;  ///< rescale so the sampled mass is exactly 1
};

struct SolverConfig {
  double cfl = 0.4;          ///< advective CFL fraction, in (0,1]
  double dt_max = 1e-2;      ///< hard step cap (and the step at rest)
  double vacuum_floor = 0.0; ///< optional artificial density floor, off by default
  double theta_visc = 1.0;   ///< viscous implicitness weight; backward Euler (1) only
};

/// Sample initial data onto the grid.  Rejects negative rho0 samples (with the
/// offending location) and u0 that fails to vanish at the endpoints; endpoint
/// values are then pinned to exactly zero.
State init_state(const InitialData& data, const Grid& grid);

/// Residual of the initial-data compatibility relation
///   [mu(rho0) u0_x]_x - [P(rho0)]_x = rho0^{1/2} g :
/// returns the L2 norm of the discrete g over cells with rho above `threshold`.
/// Cells at or below the threshold are excluded and counted.
struct CompatResult {
  double residual = 0.0;
  int used_cells = 0;
  int excluded_cells = 0;
};
CompatResult compatibility_residual(const State& state0, const FluidParams& params,
                                    const Grid& grid, double threshold);

/// Advective/acoustic step limit:
///   dt = min(dt_max, cfl * dx / max_faces(|u_j| + c(rho_face_j)))
/// with rho_face the arithmetic mean of the neighbor cells.  The viscous term
/// is implicit, so it imposes no restriction.  An all-quiet state returns dt_max.
double compute_dt(const State& state, const SolverConfig& config, const FluidParams& params,
                  const Grid& grid);

/// One time step:
///  (a) continuity by explicit conservative upwind with zero boundary flux,
///  (b) momentum semi-implicit: explicit upwind advection and pressure
///      gradient, backward-Euler viscous operator with cell-centered mu,
///      Dirichlet rows pinning u = 0 at both ends.
/// The viscous matrix is strictly diagonally dominant because mu >= mu_lower > 0,
/// so the solve succeeds even across vacuum.  Positivity of rho is asserted.
State step(const State& state, double dt, const FluidParams& params, const ForceField& force,
           const Grid& grid, const SolverConfig& config);

/// Thomas elimination for a tridiagonal system.
///   lower: n-1 subdiagonal entries, diag: n entries, upper: n-1 superdiagonal.
/// Throws NumericalError on a vanishing pivot.
std::vector<double> tridiagonal_solve(const std::vector<double>& lower,
                                      const std::vector<double>& diag,
                                      const std::vector<double>& upper,
                                      const std::vector<double>& rhs);

struct RunResult {
  State final_state;
  std::vector<DiagnosticRecord> records;
};

/// March from the initial data to t_end, emitting a diagnostic record at t = 0,
/// every sample_every time units, and at t_end.  Steps are capped so sample
/// times are hit exactly, which keeps reruns bit-reproducible.  NaN/Inf in any
/// field aborts with the failing time.
RunResult run(const InitialData& initial, const FluidParams& params, const ForceField& force,
              const Grid& grid, const SolverConfig& config, double t_end, double sample_every,
              const StationaryDensity* stationary = nullptr);

}  // namespace ns1d

#endif  // NS1D_SOLVER_HPP_
