#pragma once

#include <stdexcept>
#include <string>

namespace critlab {

/// Weight outside the admissible range 1/p < mu <= 1, or a classification
/// requested at parameters where the hypothesis block is void.
struct InvalidWeightError : std::domain_error {
  using std::domain_error::domain_error;
};

/// critical_weight called on a problem whose growth exponents are all zero.
struct NoCriticalTermError : std::domain_error {
  using std::domain_error::domain_error;
};

/// The shift formula's excluded midpoint (tau == s).
struct ExcludedCaseError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Closed-form state requested at or beyond the blow-up time.
struct BlowUpError : std::runtime_error {
  BlowUpError(const std::string& what, double t_plus_)
      : std::runtime_error(what), t_plus(t_plus_) {}
  double t_plus;
};

/// Dilation would need profile samples outside the representable grid.
struct GridRangeError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Quadrature result would be dominated by mass at the grid boundary.
struct AccuracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or unsupported configuration document.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace critlab
