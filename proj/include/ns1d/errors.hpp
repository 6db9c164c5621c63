#ifndef NS1D_ERRORS_HPP_
#define NS1D_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ns1d {

/// Malformed or inconsistent run configuration (bad key, bad value, missing section).
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Breakdown during time stepping or a linear solve (NaN/Inf, lost positivity, zero pivot).
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// The steady problem has no positive solution for the given force/mass pair.
class InfeasibleError : public std::runtime_error {
public:
  InfeasibleError(const std::string& what, double lhs_, double mass_)
      : std::runtime_error(what), lhs(lhs_), mass(mass_) {}
  double lhs;   ///< value of the feasibility integral
  double mass;  ///< target mass it must stay below
};

/// Decay-rate fit could not be performed (too few usable samples).
class FitError : public std::runtime_error {
public:
  explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ns1d

#endif  // NS1D_ERRORS_HPP_
