#include "ns1d/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ns1d {

namespace {

constexpr int kTableValidationSamples = 10000;

void require_sorted_strict(const std::vector<double>& xs, const char* what) {
  if (xs.size() < 2) {
    throw std::invalid_argument(std::string(what) + ": need at least 2 sample points");
  }
  for (std::size_t k = 1; k < xs.size(); ++k) {
    if (!(xs[k] > xs[k - 1])) {
      throw std::invalid_argument(std::string(what) +
                                  ": abscissae must be strictly increasing");
    }
  }
}

/// Piecewise-linear interpolation with flat extension beyond the end nodes.
double pl_interp(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  if (x <= xs.front()) return ys.front();
  if (x >= xs.back()) return ys.back();
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  std::size_t k = static_cast<std::size_t>(it - xs.begin());  // xs[k-1] <= x < xs[k]
  double t = (x - xs[k - 1]) / (xs[k] - xs[k - 1]);
  return ys[k - 1] + t * (ys[k] - ys[k - 1]);
}

}  // namespace

// ---------------------------------------------------------------------------
// ViscosityLaw
// ---------------------------------------------------------------------------

ViscosityLaw ViscosityLaw::constant(double mu0) {
  if (!(mu0 > 0.0)) {
    throw std::invalid_argument("viscosity: constant value must be positive");
  }
  ViscosityLaw law;
  law.kind_ = Kind::Constant;
  law.mu_bar_ = mu0;
  law.mu_lower_ = mu0;
  return law;
}

ViscosityLaw ViscosityLaw::affine(double mu_bar, double slope) {
  if (!(mu_bar > 0.0)) {
    throw std::invalid_argument("viscosity: affine mu_bar must be positive");
  }
  if (slope < 0.0) {
    // a negative slope drops below mu_bar for large rho, violating the lower bound
    throw std::invalid_argument("viscosity: affine slope must be nonnegative");
  }
  ViscosityLaw law;
  law.kind_ = Kind::Affine;
  law.mu_bar_ = mu_bar;
  law.slope_ = slope;
  law.mu_lower_ = mu_bar;
  return law;
}

ViscosityLaw ViscosityLaw::power(double mu_bar, double coeff, double theta) {
  if (!(mu_bar > 0.0)) {
    throw std::invalid_argument("viscosity: power mu_bar must be positive");
  }
  if (coeff < 0.0) {
    throw std::invalid_argument("viscosity: power coeff must be nonnegative");
  }
  if (!(theta > 0.0)) {
    throw std::invalid_argument("viscosity: power theta must be positive");
  }
  ViscosityLaw law;
  law.kind_ = Kind::Power;
  law.mu_bar_ = mu_bar;
  law.coeff_ = coeff;
  law.theta_ = theta;
  law.mu_lower_ = mu_bar;
  return law;
}

ViscosityLaw ViscosityLaw::table(std::vector<double> rho_points, std::vector<double> mu_points,
                                 double mu_lower) {
  if (!(mu_lower > 0.0)) {
    throw std::invalid_argument("viscosity: mu_lower must be positive");
  }
  require_sorted_strict(rho_points, "viscosity table");
  if (rho_points.size() != mu_points.size()) {
    throw std::invalid_argument("viscosity table: rho/mu sample counts differ");
  }
  if (rho_points.front() < 0.0) {
    throw std::invalid_argument("viscosity table: abscissae must be nonnegative");
  }
  ViscosityLaw law;
  law.kind_ = Kind::Table;
  law.mu_lower_ = mu_lower;
  law.rho_points_ = std::move(rho_points);
  law.mu_points_ = std::move(mu_points);
  // The bound must hold for every rho >= 0, which a call-time check cannot
  // guarantee; sample densely once here and refuse bad tables outright.
  double span = 10.0 * law.rho_points_.back();
  for (int k = 0; k <= kTableValidationSamples; ++k) {
    double rho = span * static_cast<double>(k) / kTableValidationSamples;
    if (pl_interp(law.rho_points_, law.mu_points_, rho) < law.mu_lower_) {
      throw std::invalid_argument("viscosity table: dips below mu_lower near rho = " +
                                  std::to_string(rho));
    }
  }
  return law;
}

double ViscosityLaw::operator()(double rho) const {
  if (rho < 0.0) {
    throw std::domain_error("viscosity: rho must be nonnegative");
  }
  switch (kind_) {
    case Kind::Constant:
      return mu_bar_;
    case Kind::Affine:
      return mu_bar_ + slope_ * rho;
    case Kind::Power:
      return mu_bar_ + coeff_ * std::pow(rho, theta_);
    case Kind::Table:
      return pl_interp(rho_points_, mu_points_, rho);
  }
  return mu_bar_;  // unreachable
}

// ---------------------------------------------------------------------------
// ForceField
// ---------------------------------------------------------------------------

ForceField ForceField::zero() { return ForceField(); }

ForceField ForceField::constant(double c) {
  ForceField f;
  f.kind_ = Kind::Constant;
  f.value_ = c;
  return f;
}

ForceField ForceField::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) {
    throw std::invalid_argument("force: polynomial needs at least one coefficient");
  }
  ForceField f;
  f.kind_ = Kind::Polynomial;
  f.coeffs_ = std::move(coeffs);
  return f;
}

ForceField ForceField::sinusoid(double amplitude, double frequency, double phase) {
  ForceField f;
  f.kind_ = Kind::Sinusoid;
  f.amplitude_ = amplitude;
  f.frequency_ = frequency;
  f.phase_ = phase;
  return f;
}

ForceField ForceField::table(std::vector<double> x_points, std::vector<double> f_points) {
  require_sorted_strict(x_points, "force table");
  if (x_points.size() != f_points.size()) {
    throw std::invalid_argument("force table: x/f sample counts differ");
  }
  if (x_points.front() < 0.0 || x_points.back() > 1.0) {
    throw std::invalid_argument("force table: abscissae must lie in [0,1]");
  }
  ForceField f;
  f.kind_ = Kind::Table;
  f.x_points_ = std::move(x_points);
  f.f_points_ = std::move(f_points);
  // Exact primitive of the interpolant, accumulated at the nodes.
  f.cum_integral_.resize(f.x_points_.size());
  f.cum_integral_[0] = 0.0;
  for (std::size_t k = 1; k < f.x_points_.size(); ++k) {
    double h = f.x_points_[k] - f.x_points_[k - 1];
    f.cum_integral_[k] =
        f.cum_integral_[k - 1] + 0.5 * h * (f.f_points_[k] + f.f_points_[k - 1]);
  }
  return f;
}

namespace {

void require_unit_interval(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("force: x = " + std::to_string(x) + " outside [0,1]");
  }
}

}  // namespace

double ForceField::eval(double x) const {
  require_unit_interval(x);
  switch (kind_) {
    case Kind::Zero:
      return 0.0;
    case Kind::Constant:
      return value_;
    case Kind::Polynomial: {
      double acc = 0.0;
      for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
      return acc;
    }
    case Kind::Sinusoid:
      return amplitude_ * std::sin(2.0 * std::numbers::pi * frequency_ * x + phase_);
    case Kind::Table:
      return pl_interp(x_points_, f_points_, x);
  }
  return 0.0;
}

double ForceField::primitive(double x) const {
  require_unit_interval(x);
  switch (kind_) {
    case Kind::Zero:
      return 0.0;
    case Kind::Constant:
      return value_ * x;
    case Kind::Polynomial: {
      double acc = 0.0;
      for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * x + coeffs_[k] / static_cast<double>(k + 1);
      }
      return acc * x;
    }
    case Kind::Sinusoid: {
      double w = 2.0 * std::numbers::pi * frequency_;
      if (w == 0.0) return amplitude_ * std::sin(phase_) * x;
      return amplitude_ / w * (std::cos(phase_) - std::cos(w * x + phase_));
    }
    case Kind::Table: {
      // flat segments before the first and after the last node
      if (x <= x_points_.front()) return f_points_.front() * x;
      double head = f_points_.front() * x_points_.front();
      if (x >= x_points_.back()) {
        return head + cum_integral_.back() + f_points_.back() * (x - x_points_.back());
      }
      auto it = std::upper_bound(x_points_.begin(), x_points_.end(), x);
      std::size_t k = static_cast<std::size_t>(it - x_points_.begin());
      double x0 = x_points_[k - 1];
      double h = x - x0;
      double fx = pl_interp(x_points_, f_points_, x);
      return head + cum_integral_[k - 1] + 0.5 * h * (f_points_[k - 1] + fx);
    }
  }
  return 0.0;
}

double ForceField::sup_norm() const {
  switch (kind_) {
    case Kind::Zero:
      return 0.0;
    case Kind::Constant:
      return std::fabs(value_);
    case Kind::Sinusoid:
      return std::fabs(amplitude_);
    case Kind::Polynomial:
    case Kind::Table: {
      // polynomial: scan densely (degree is small, extrema interior or at ends);
      // table: the PL maximum is at a node, the scan covers that too
      double m = 0.0;
      for (int k = 0; k <= kTableValidationSamples; ++k) {
        double x = static_cast<double>(k) / kTableValidationSamples;
        m = std::max(m, std::fabs(eval(x)));
      }
      return m;
    }
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// FluidParams and the pressure law
// ---------------------------------------------------------------------------

FluidParams::FluidParams(double gamma_, double A_, ViscosityLaw viscosity_)
    : gamma(gamma_), A(A_), viscosity(std::move(viscosity_)) {
  if (!(gamma > 1.0)) {
    throw std::invalid_argument("fluid: gamma must exceed 1, got " + std::to_string(gamma));
  }
  if (!(A > 0.0)) {
    throw std::invalid_argument("fluid: pressure coefficient A must be positive");
  }
}

double pressure(double rho, const FluidParams& params) {
  if (rho < 0.0) {
    throw std::domain_error("pressure: rho must be nonnegative");
  }
  return params.A * std::pow(rho, params.gamma);
}

double pressure_derivative(double rho, const FluidParams& params) {
  if (rho < 0.0) {
    throw std::domain_error("pressure_derivative: rho must be nonnegative");
  }
  return params.A * params.gamma * std::pow(rho, params.gamma - 1.0);
}

double sound_speed(double rho, const FluidParams& params) {
  return std::sqrt(pressure_derivative(rho, params));
}

}  // namespace ns1d
