#pragma once

#include "critlab/evolution.hpp"
#include "critlab/rational.hpp"

#include <vector>

namespace critlab {

/// Step controls for the sine-collocation reaction-diffusion run.
struct FujitaStepConfig {
  double rel_tol{1e-6};
  double abs_tol{1e-14};
  double initial_step{1e-4};
  double max_step{0.05};
  double min_step{1e-18};
  double blow_up_magnitude{1e12};
  double t_plus_resolution{1e-6};
  long max_steps{2000000};
};

struct FujitaResult {
  SolveOutcome outcome;        // trajectory of sine coefficients
  SerrinReport serrin;
  DiagonalOperator op;         // eigenvalues k^2 of the Dirichlet Laplacian
  double even_mode_leakage{0.0};  // max even-coefficient size over the run, relative
  std::vector<double> pairing;    // first-eigenfunction average m(t) per trajectory node
};

/// Critical weight of the 1-D problem in the L_2 setting: 1/p + 1/4 - 1/(kappa-1).
Rational fujita_critical_mu(const Rational& kappa, const Rational& p);

/// Reaction-diffusion run on (0, pi) with zero boundary values: the source
/// is |u|^{kappa-1} u, the linear part is diagonal in the sine basis and
/// propagated exactly, the source is evaluated pointwise on a zero-padded
/// collocation grid (3/2 dealiasing; exact for quadratic and cubic powers,
/// documented aliasing remainder for higher and non-integer kappa).
/// Exponential two-stage stepping with error-based step control; blow-up is
/// declared at the configured magnitude with a bracketed escape time.
///
/// u0_modes are sine coefficients; shorter vectors are zero-padded. Requires
/// kappa > 3 (the supercritical range in one dimension).
FujitaResult fujita_1d_solve(const Rational& kappa, int modes,
                             const std::vector<double>& u0_modes, const Rational& mu,
                             const Rational& p, double horizon,
                             const FujitaStepConfig& cfg = {});

}  // namespace critlab
