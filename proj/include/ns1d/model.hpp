#ifndef NS1D_MODEL_HPP_
#define NS1D_MODEL_HPP_

#include <vector>

namespace ns1d {

/// Density-dependent viscosity coefficient mu(rho) with a certified positive
/// lower bound mu_lower: every law is validated at construction so that
/// mu(rho) >= mu_lower for all rho >= 0, and evaluation can never fail.
/// Closed forms are checked analytically; tables by dense sampling.
class ViscosityLaw {
public:
  enum class Kind { Constant, Affine, Power, Table };

  /// mu(rho) = mu0; mu_lower = mu0.
  static ViscosityLaw constant(double mu0);
  /// mu(rho) = mu_bar + slope * rho, slope >= 0; mu_lower = mu_bar.
  static ViscosityLaw affine(double mu_bar, double slope);
  /// mu(rho) = mu_bar + coeff * rho^theta, coeff >= 0, theta > 0; mu_lower = mu_bar.
  static ViscosityLaw power(double mu_bar, double coeff, double theta);
  /// Piecewise-linear through (rho_k, mu_k), clamped flat beyond the end
  /// abscissae.  Validated against mu_lower by sampling 10^4 points on
  /// [0, 10 * max abscissa].
  static ViscosityLaw table(std::vector<double> rho_points, std::vector<double> mu_points,
                            double mu_lower);

  double operator()(double rho) const;
  double mu_lower() const { return mu_lower_; }
  Kind kind() const { return kind_; }

  // Raw parameters, exposed for config round-tripping.
  double param_mu_bar() const { return mu_bar_; }
  double param_slope() const { return slope_; }
  double param_coeff() const { return coeff_; }
  double param_theta() const { return theta_; }
  const std::vector<double>& table_rho() const { return rho_points_; }
  const std::vector<double>& table_mu() const { return mu_points_; }

private:
  ViscosityLaw() = default;

  Kind kind_ = Kind::Constant;
  double mu_lower_ = 0.0;
  double mu_bar_ = 0.0;
  double slope_ = 0.0;
  double coeff_ = 0.0;
  double theta_ = 0.0;
  std::vector<double> rho_points_;
  std::vector<double> mu_points_;
};

/// Time-independent external force f(x) on [0,1] together with its exact
/// primitive F(x) = integral of f from 0 to x.  For closed forms F is analytic;
/// for tables F is the exact integral of the piecewise-linear interpolant, so
/// dF/dx = f holds by construction rather than by quadrature.
class ForceField {
public:
  enum class Kind { Zero, Constant, Polynomial, Sinusoid, Table };

  static ForceField zero();
  static ForceField constant(double c);
  /// f(x) = sum_k coeffs[k] * x^k.
  static ForceField polynomial(std::vector<double> coeffs);
  /// f(x) = amplitude * sin(2*pi*frequency*x + phase).
  static ForceField sinusoid(double amplitude, double frequency, double phase = 0.0);
  /// Piecewise-linear through (x_k, f_k) with x_k in [0,1], flat beyond the ends.
  static ForceField table(std::vector<double> x_points, std::vector<double> f_points);

  /// f(x); x outside [0,1] is a domain error.
  double eval(double x) const;
  /// F(x) = int_0^x f; F(0) = 0.
  double primitive(double x) const;
  /// sup |f| over [0,1] (analytic for closed forms, nodal max for tables).
  double sup_norm() const;

  Kind kind() const { return kind_; }
  double param_value() const { return value_; }
  double param_amplitude() const { return amplitude_; }
  double param_frequency() const { return frequency_; }
  double param_phase() const { return phase_; }
  const std::vector<double>& poly_coeffs() const { return coeffs_; }
  const std::vector<double>& table_x() const { return x_points_; }
  const std::vector<double>& table_f() const { return f_points_; }

private:
  ForceField() = default;

  Kind kind_ = Kind::Zero;
  double value_ = 0.0;
  double amplitude_ = 0.0;
  double frequency_ = 0.0;
  double phase_ = 0.0;
  std::vector<double> coeffs_;
  std::vector<double> x_points_;
  std::vector<double> f_points_;
  std::vector<double> cum_integral_;  // primitive at table nodes
};

/// Barotropic constitutive parameters: P(rho) = A * rho^gamma with gamma > 1,
/// plus the viscosity law.
struct FluidParams {
  FluidParams(double gamma_, double A_, ViscosityLaw viscosity_);

  double gamma;
  double A;
  ViscosityLaw viscosity;
};

/// P(rho) = A * rho^gamma.  rho < 0 is a domain error.
double pressure(double rho, const FluidParams& params);

/// P'(rho) = A * gamma * rho^(gamma-1); vanishes at vacuum since gamma > 1.
double pressure_derivative(double rho, const FluidParams& params);

/// sqrt(P'(rho)), the barotropic sound speed; zero at vacuum.
double sound_speed(double rho, const FluidParams& params);

}  // namespace ns1d

#endif  // NS1D_MODEL_HPP_
