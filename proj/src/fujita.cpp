#include "critlab/fujita.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace critlab {

namespace {

// Discrete sine transform pair on the collocation points x_j = j pi / (M+1),
// dense matrix form; the mode counts here keep this far below transform cost
// that would justify an FFT.
struct SineTransform {
  int points;
  std::vector<double> matrix;  // sin(j k pi / (M+1)), row j, col k (1-based shifts)

  explicit SineTransform(int m) : points(m), matrix(static_cast<std::size_t>(m) * m) {
    const double step = std::numbers::pi / (m + 1);
    for (int j = 1; j <= m; ++j)
      for (int k = 1; k <= m; ++k)
        matrix[static_cast<std::size_t>(j - 1) * m + (k - 1)] = std::sin(j * k * step);
  }

  // values at collocation points from coefficients (zero-padded to M)
  void synthesize(const std::vector<double>& coeffs, std::vector<double>& values) const {
    values.assign(points, 0.0);
    const int n = std::min<int>(points, static_cast<int>(coeffs.size()));
    for (int j = 0; j < points; ++j) {
      double s = 0.0;
      const double* row = &matrix[static_cast<std::size_t>(j) * points];
      for (int k = 0; k < n; ++k) s += row[k] * coeffs[k];
      values[j] = s;
    }
  }

  // leading `keep` coefficients from collocation values
  void analyze(const std::vector<double>& values, int keep, std::vector<double>& coeffs) const {
    coeffs.assign(keep, 0.0);
    const double scale = 2.0 / (points + 1);
    for (int k = 0; k < keep; ++k) {
      double s = 0.0;
      for (int j = 0; j < points; ++j)
        s += matrix[static_cast<std::size_t>(j) * points + k] * values[j];
      coeffs[k] = scale * s;
    }
  }
};

}  // namespace

Rational fujita_critical_mu(const Rational& kappa, const Rational& p) {
  return Rational(1) / p + Rational(1, 4) - Rational(1) / (kappa - Rational(1));
}

FujitaResult fujita_1d_solve(const Rational& kappa, int modes,
                             const std::vector<double>& u0_modes, const Rational& mu,
                             const Rational& p, double horizon, const FujitaStepConfig& cfg) {
  if (kappa <= Rational(3))
    throw std::invalid_argument("fujita_1d_solve: kappa must exceed 3 in one dimension");
  if (modes < 4) throw std::invalid_argument("fujita_1d_solve: need at least 4 modes");
  if (static_cast<int>(u0_modes.size()) > modes)
    throw std::invalid_argument("fujita_1d_solve: more initial coefficients than modes");
  if (!(horizon > 0.0)) throw std::invalid_argument("fujita_1d_solve: horizon must be positive");

  const double ke = kappa.to_double();
  const int padded = (3 * modes) / 2 + 1;  // 3/2 zero-padding
  SineTransform dst(padded);

  std::vector<double> lambda(modes);
  for (int k = 1; k <= modes; ++k) lambda[k - 1] = double(k) * double(k);

  std::vector<double> c(modes, 0.0);
  std::copy(u0_modes.begin(), u0_modes.end(), c.begin());

  std::vector<double> values, g0(modes), g1(modes), stage(modes), cnew(modes);
  auto source = [&](const std::vector<double>& coeffs, std::vector<double>& out) {
    dst.synthesize(coeffs, values);
    for (double& v : values) v = std::pow(std::abs(v), ke - 1.0) * v;
    dst.analyze(values, modes, out);
  };

  FujitaResult result;
  result.op = DiagonalOperator::explicit_list(lambda);
  result.outcome.trajectory.mu = mu;
  result.outcome.trajectory.p = p;
  result.outcome.status = SolveStatus::converged_global_on_horizon;

  auto record = [&](double t, const std::vector<double>& coeffs) {
    result.outcome.trajectory.times.push_back(t);
    result.outcome.trajectory.states.push_back(coeffs);
  };
  record(0.0, c);

  double t = 0.0;
  double h = std::min(cfg.initial_step, horizon);
  long steps = 0;
  double peak = 0.0;
  double even_peak = 0.0;

  auto scan = [&](const std::vector<double>& coeffs) {
    for (int k = 0; k < modes; ++k) {
      const double a = std::abs(coeffs[k]);
      peak = std::max(peak, a);
      if ((k + 1) % 2 == 0) even_peak = std::max(even_peak, a);
    }
  };
  scan(c);

  while (t < horizon && steps < cfg.max_steps) {
    ++steps;
    h = std::min(h, horizon - t);

    // phi1(-z) = (1-e^{-z})/z, phi2(-z) = (phi1 - e^{-z})/z; series below
    // the cancellation knee
    auto phi12 = [](double z, double e, double& p1, double& p2) {
      if (z < 1e-5) {
        p1 = 1.0 - z / 2.0 + z * z / 6.0 - z * z * z / 24.0;
        p2 = 0.5 - z / 6.0 + z * z / 24.0 - z * z * z / 120.0;
      } else {
        p1 = (1.0 - e) / z;
        p2 = (p1 - e) / z;
      }
    };

    source(c, g0);
    for (int k = 0; k < modes; ++k) {
      const double z = lambda[k] * h;
      const double e = std::exp(-z);
      double p1, p2;
      phi12(z, e, p1, p2);
      stage[k] = e * c[k] + h * p1 * g0[k];
    }
    source(stage, g1);
    double err = 0.0;
    double unorm = 0.0;
    for (int k = 0; k < modes; ++k) {
      const double z = lambda[k] * h;
      const double e = std::exp(-z);
      double p1, p2;
      phi12(z, e, p1, p2);
      const double corr = h * p2 * (g1[k] - g0[k]);
      cnew[k] = e * c[k] + h * p1 * g0[k] + corr;
      err = std::max(err, std::abs(corr));
      unorm = std::max(unorm, std::abs(cnew[k]));
    }
    const double scale = cfg.abs_tol + cfg.rel_tol * std::max(unorm, 1.0);

    if (err <= scale || h <= cfg.min_step) {
      t += h;
      c = cnew;
      record(t, c);
      scan(c);
      if (unorm > cfg.blow_up_magnitude) {
        result.outcome.status = SolveStatus::continued_to_blow_up;
        result.outcome.t_plus = Bracket{t, t + cfg.t_plus_resolution};
        break;
      }
    }
    const double factor = 0.9 * std::sqrt(scale / std::max(err, 1e-300));
    h *= std::clamp(factor, 0.2, 5.0);
    h = std::min(h, cfg.max_step);
    if (h < cfg.min_step) h = cfg.min_step;
  }

  if (result.outcome.status != SolveStatus::continued_to_blow_up && t < horizon)
    result.outcome.status = SolveStatus::picard_diverged;  // step count exhausted

  result.outcome.iterations = static_cast<int>(std::min<long>(steps, INT32_MAX));
  result.even_mode_leakage = peak > 0.0 ? even_peak / peak : 0.0;

  result.pairing.reserve(result.outcome.trajectory.times.size());
  for (const auto& state : result.outcome.trajectory.states)
    result.pairing.push_back(state[0] * std::numbers::pi / 4.0);

  result.serrin = serrin_monitor(result.outcome, mu, p, result.op);
  return result;
}

}  // namespace critlab
