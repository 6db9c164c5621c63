#ifndef NS1D_CONFIG_HPP_
#define NS1D_CONFIG_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ns1d/model.hpp"
#include "ns1d/solver.hpp"
#include "ns1d/stationary.hpp"

namespace ns1d {

struct ViscositySpec {
  ViscosityLaw::Kind kind = ViscosityLaw::Kind::Constant;
  double mu = 1.0;                       // constant
  double mu_bar = 1.0;                   // affine / power
  double slope = 0.0;                    // affine
  double coeff = 0.0;                    // power
  double theta = 1.0;                    // power
  double mu_lower = 1.0;                 // table
  std::vector<double> rho_points;        // table
  std::vector<double> mu_points;         // table

  ViscosityLaw build() const;
};

struct ForceSpec {
  ForceField::Kind kind = ForceField::Kind::Zero;
  double value = 0.0;                    // constant
  std::vector<double> coeffs;            // poly
  double amplitude = 0.0;                // sin
  double frequency = 1.0;                // sin
  double phase = 0.0;                    // sin
  std::vector<double> x_points;          // table
  std::vector<double> f_points;          // table

  ForceField build() const;
};

enum class Rho0Kind { Uniform, Linear, Sin, StationarySin, Table };

struct Rho0Spec {
  Rho0Kind kind = Rho0Kind::Uniform;
  double value = 1.0;                    // uniform
  double a = 0.0, b = 0.0;               // linear: a + b*x
  double offset = 1.0;                   // sin
  double amplitude = 0.0;                // sin / stationary_sin
  double frequency = 1.0;                // sin / stationary_sin
  double phase = 0.0;                    // sin / stationary_sin
  std::vector<double> x_points;          // table
  std::vector<double> values;            // table
};

enum class U0Kind { Zero, SinPi, Parabola, Table };

struct U0Spec {
  U0Kind kind = U0Kind::Zero;
  double amplitude = 0.0;                // sinpi / parabola
  int mode = 1;                          // sinpi: amplitude * sin(pi*mode*x)
  std::vector<double> x_points;          // table
  std::vector<double> values;            // table
};

/// One fully validated scenario description.  parse -> serialize -> parse is
/// the identity on the semantic content.
struct RunConfig {
  std::string scenario;
  int n = 200;

  double gamma = 2.0;
  double A = 1.0;
  ViscositySpec viscosity;
  ForceSpec force;

  Rho0Spec rho0;
  U0Spec u0;
  bool normalize_mass = true;

  double t_end = 1.0;
  double sample_every = 0.25;
  double cfl = 0.4;
  double dt_max = 1e-2;
  double vacuum_floor = 0.0;
  double stationary_tol = 1e-12;
  std::optional<std::pair<double, double>> fit_window;  // default: last half of run
  std::string output_dir;  // default: out/<scenario>

  FluidParams make_fluid_params() const;
  ForceField make_force() const;
  /// The steady profile is needed when rho0 is defined relative to it.
  InitialData make_initial_data(const StationaryDensity* stationary = nullptr) const;
  SolverConfig make_solver_config() const;
  /// Fit window, defaulted to the last half of the run when unset.
  std::pair<double, double> effective_fit_window() const;
};

/// Parse a flat sectioned key-value document ([grid], [fluid], [force],
/// [initial], [run]).  Unknown keys, missing required keys, type mismatches
/// and constraint violations all raise ConfigError naming the key.
RunConfig parse_config(const std::string& text);

/// Read and parse a config file.
RunConfig load_config(const std::string& path);

/// Canonical textual form; stable across parse/serialize cycles.
std::string serialize_config(const RunConfig& config);

/// FNV-1a of the canonical serialization, as 16 hex chars; identifies a config
/// in CSV metadata headers.
std::string config_hash(const RunConfig& config);

}  // namespace ns1d

#endif  // NS1D_CONFIG_HPP_
