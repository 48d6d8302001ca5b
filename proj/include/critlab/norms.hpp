#pragma once

#include "critlab/rational.hpp"
#include "critlab/spectral_model.hpp"

#include <vector>

namespace critlab {

/// Trajectory of coefficient vectors on a nonuniform time grid with its
/// weighting metadata. The grid may start at t = 0: the weight exponent
/// (1 - mu) p is nonnegative for admissible mu, so the integrand is finite
/// there; grids refined geometrically near 0 keep the weighted integral
/// accurate.
struct WeightedTrajectory {
  std::vector<double> times;
  std::vector<StateVector> states;
  Rational mu{1};
  Rational p{2};

  void validate() const;  // nonempty, strictly increasing, matching lengths
};

/// Fractional-power norm |A^beta x| = (sum_k a_k^{2 beta} |x_k|^2)^{1/2},
/// beta in [0,1].
double x_beta_norm(const StateVector& x, const Rational& beta, const DiagonalOperator& op);

/// Weighted trajectory norm ( integral (t^{1-mu} |A^s u(t)|)^p dt )^{1/p}
/// by composite trapezoid on the trajectory's grid.
double lp_mu_norm(const WeightedTrajectory& traj, const Rational& s,
                  const DiagonalOperator& op);

/// Quadrature controls for the homogeneous real-interpolation norm. The
/// integration window covers the spectrum extended by the stated number of
/// decades on each side; refinement doubles the point count until the
/// Richardson-extrapolated value moves by less than rel_tol.
struct QuadratureSpec {
  int decades_below{8};
  int decades_above{8};
  int points_per_decade{8};
  int max_refinements{18};
  double rel_tol{1e-8};

  void validate() const;
};

/// Homogeneous real-interpolation norm
///   |x| = [ integral_0^inf | r^alpha A (r + A)^{-1} x |^p dr/r ]^{1/p},
/// computed in the log-r variable. alpha must lie strictly inside (0,1):
/// the defining integral diverges at an endpoint otherwise.
double da_norm(const StateVector& x, const Rational& alpha, const Rational& p,
               const DiagonalOperator& op, const QuadratureSpec& quad = {});

}  // namespace critlab
