#include "critlab/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace critlab {

void WeightedTrajectory::validate() const {
  if (times.empty()) throw std::invalid_argument("WeightedTrajectory: empty trajectory");
  if (times.size() != states.size())
    throw std::invalid_argument("WeightedTrajectory: times/states length mismatch");
  if (times.front() < 0.0)
    throw std::invalid_argument("WeightedTrajectory: negative time");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw std::invalid_argument("WeightedTrajectory: times must be strictly increasing");
}

double x_beta_norm(const StateVector& x, const Rational& beta, const DiagonalOperator& op) {
  if (beta < Rational(0) || beta > Rational(1))
    throw std::invalid_argument("x_beta_norm: beta must lie in [0,1]");
  if (x.size() != op.eigenvalues.size())
    throw std::invalid_argument("x_beta_norm: state length mismatch");
  const double two_beta = 2.0 * beta.to_double();
  double sum = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k)
    sum += std::pow(op.eigenvalues[k], two_beta) * x[k] * x[k];
  return std::sqrt(sum);
}

double lp_mu_norm(const WeightedTrajectory& traj, const Rational& s,
                  const DiagonalOperator& op) {
  traj.validate();
  if (s < Rational(0)) throw std::invalid_argument("lp_mu_norm: s must be nonnegative");
  const double p = traj.p.to_double();
  const double weight_exp = (1.0 - traj.mu.to_double()) * p;
  if (weight_exp < 0.0) throw std::invalid_argument("lp_mu_norm: mu must not exceed 1");
  const double two_s = 2.0 * s.to_double();

  auto integrand = [&](std::size_t i) {
    double norm_sq = 0.0;
    const StateVector& x = traj.states[i];
    for (std::size_t k = 0; k < x.size(); ++k)
      norm_sq += std::pow(op.eigenvalues[k], two_s) * x[k] * x[k];
    const double t = traj.times[i];
    const double weight = (weight_exp == 0.0) ? 1.0 : std::pow(t, weight_exp);
    return weight * std::pow(norm_sq, 0.5 * p);
  };

  double integral = 0.0;
  double prev = integrand(0);
  for (std::size_t i = 1; i < traj.times.size(); ++i) {
    const double cur = integrand(i);
    integral += 0.5 * (prev + cur) * (traj.times[i] - traj.times[i - 1]);
    prev = cur;
  }
  return std::pow(integral, 1.0 / p);
}

void QuadratureSpec::validate() const {
  if (decades_below < 1 || decades_above < 1 || points_per_decade < 1 || max_refinements < 1)
    throw std::invalid_argument("QuadratureSpec: all controls must be positive");
  if (!(rel_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: rel_tol must be positive");
}

double da_norm(const StateVector& x, const Rational& alpha, const Rational& p,
               const DiagonalOperator& op, const QuadratureSpec& quad) {
  if (alpha <= Rational(0) || alpha >= Rational(1))
    throw std::invalid_argument("da_norm: alpha must lie strictly inside (0,1)");
  if (p <= Rational(1)) throw std::invalid_argument("da_norm: p must exceed 1");
  if (x.size() != op.eigenvalues.size())
    throw std::invalid_argument("da_norm: state length mismatch");
  quad.validate();

  bool all_zero = true;
  for (double v : x)
    if (v != 0.0) { all_zero = false; break; }
  if (all_zero) return 0.0;

  const double a = alpha.to_double();
  const double pe = p.to_double();
  const double ln10 = std::log(10.0);
  // the integrand decays like r^{alpha p} at zero and r^{-(1-alpha) p} at
  // infinity; widen the window until the truncated tails are below 1e-12
  const int below =
      std::max(quad.decades_below, static_cast<int>(std::ceil(12.0 / (a * pe))) + 1);
  const int above = std::max(quad.decades_above,
                             static_cast<int>(std::ceil(12.0 / ((1.0 - a) * pe))) + 1);
  const double y_lo = std::log(op.min_eigenvalue()) - below * ln10;
  const double y_hi = std::log(op.max_eigenvalue()) + above * ln10;

  // integrand in y = ln r:  ( e^{alpha y} |A (e^y + A)^{-1} x| )^p
  auto f = [&](double y) {
    const double r = std::exp(y);
    double norm_sq = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      const double g = op.eigenvalues[k] / (r + op.eigenvalues[k]);
      norm_sq += g * g * x[k] * x[k];
    }
    return std::exp(a * pe * y) * std::pow(norm_sq, 0.5 * pe);
  };

  long n = static_cast<long>((below + above) * quad.points_per_decade) + 8;
  auto trapezoid = [&](long panels) {
    const double h = (y_hi - y_lo) / double(panels);
    double sum = 0.5 * (f(y_lo) + f(y_hi));
    for (long i = 1; i < panels; ++i) sum += f(y_lo + i * h);
    return sum * h;
  };

  double coarse = trapezoid(n);
  double richardson = coarse;
  for (int it = 0; it < quad.max_refinements; ++it) {
    n *= 2;
    const double fine = trapezoid(n);
    const double extrapolated = fine + (fine - coarse) / 3.0;
    if (std::abs(extrapolated - richardson) <= quad.rel_tol * std::abs(extrapolated)) {
      richardson = extrapolated;
      break;
    }
    richardson = extrapolated;
    coarse = fine;
  }
  return std::pow(richardson, 1.0 / pe);
}

}  // namespace critlab
