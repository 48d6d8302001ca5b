#include "critlab/evolution.hpp"

#include "critlab/errors.hpp"
#include "critlab/index_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace critlab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// phi_m(w) = (e^w - sum_{n<m} w^n/n!) / w^m, evaluated stably for w <= 0.
struct Phis {
  double p1, p2, p3;
};

Phis phi_functions(double w) {
  Phis out;
  if (std::abs(w) < 0.25) {
    // truncated exponential series; next term < 1e-17 at |w| = 0.25
    double term = 1.0;
    double s1 = 0.0, s2 = 0.0, s3 = 0.0;
    double factorial = 1.0;
    for (int n = 0; n <= 12; ++n) {
      if (n > 0) {
        factorial *= n;
        term *= w;
      }
      const double wn = term;  // w^n
      s1 += wn / (factorial * (n + 1));
      s2 += wn / (factorial * (n + 1) * (n + 2));
      s3 += wn / (factorial * (n + 1) * (n + 2) * (n + 3));
    }
    out.p1 = s1;
    out.p2 = s2;
    out.p3 = s3;
  } else {
    const double em = std::expm1(w);
    out.p1 = em / w;
    out.p2 = (em - w) / (w * w);
    out.p3 = (em - w - 0.5 * w * w) / (w * w * w);
  }
  return out;
}

// Exponential moments over one step: M_m = integral_0^h e^{-a(h-s)} s^m ds.
struct Moments {
  double m0, m1, m2;
};

Moments exp_moments(double a, double h) {
  const Phis phi = phi_functions(-a * h);
  return {h * phi.p1, h * h * phi.p2, 2.0 * h * h * h * phi.p3};
}

struct StepWeights {
  double decay;           // e^{-a h}
  double wa, wb, wc;      // quadrature weights for nodes t_{j-2}, t_{j-1}, t_j
  bool quadratic;
};

// Product integration of the Duhamel increment with the interpolating
// quadratic through (t_{j-2}, t_{j-1}, t_j); linear on the first interval.
StepWeights step_weights(double a, double h, double h_prev) {
  StepWeights sw;
  sw.decay = std::exp(-a * h);
  const Moments m = exp_moments(a, h);
  if (h_prev > 0.0) {
    sw.quadratic = true;
    sw.wa = (m.m2 - h * m.m1) / (h_prev * (h_prev + h));
    sw.wb = -(m.m2 + (h_prev - h) * m.m1 - h * h_prev * m.m0) / (h_prev * h);
    sw.wc = (m.m2 + h_prev * m.m1) / ((h + h_prev) * h);
  } else {
    sw.quadratic = false;
    sw.wa = 0.0;
    sw.wb = m.m0 - m.m1 / h;
    sw.wc = m.m1 / h;
  }
  return sw;
}

// Blow-up proxy: the larger of the plain and conjugated component sizes.
double blow_up_gauge(const StateVector& u, const DiagonalOperator& op, double two_beta_m1) {
  double m = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    const double a = std::abs(u[k]);
    m = std::max(m, std::max(a, std::pow(op.eigenvalues[k], two_beta_m1) * a));
  }
  return m;
}

}  // namespace

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::converged_global_on_horizon: return "converged_global_on_horizon";
    case SolveStatus::continued_to_blow_up: return "continued_to_blow_up";
    case SolveStatus::picard_diverged: return "picard_diverged";
  }
  return "?";
}

std::string to_string(SerrinVerdict v) {
  return v == SerrinVerdict::bounded ? "bounded" : "diverging";
}

std::vector<double> geometric_window_grid(double span, const TimeGridSpec& spec) {
  if (!(span > 0.0)) throw std::invalid_argument("geometric_window_grid: span must be positive");
  if (spec.growth <= 1.0 || spec.first_step_fraction <= 0.0 ||
      spec.first_step_fraction >= 1.0 || spec.max_step_fraction <= 0.0)
    throw std::invalid_argument("geometric_window_grid: bad grid spec");
  const double h_max = span * spec.max_step_fraction;
  std::vector<double> nodes;
  double t = span * spec.first_step_fraction;
  double h = t;
  while (t < span && static_cast<int>(nodes.size()) < spec.max_nodes) {
    nodes.push_back(t);
    h = std::min(h * spec.growth, h_max);
    t += h;
  }
  nodes.push_back(span);
  return nodes;
}

void apply_nonlinearity(const DiagonalModel& model, const StateVector& u, StateVector& out) {
  const std::size_t n = u.size();
  out.resize(n);
  const double beta = model.nonlinearity.beta.to_double();
  switch (model.nonlinearity.kind) {
    case NonlinearityKind::zero:
      std::fill(out.begin(), out.end(), 0.0);
      break;
    case NonlinearityKind::quadratic_weighted:
      for (std::size_t k = 0; k < n; ++k)
        out[k] = std::pow(model.op.eigenvalues[k], 2.0 * beta) * u[k] * u[k];
      break;
    case NonlinearityKind::cubic_damped:
      // weight chosen so the conjugated dynamics are w' + w = -w^3
      for (std::size_t k = 0; k < n; ++k)
        out[k] = -std::pow(model.op.eigenvalues[k], 4.0 * beta - 1.0) * u[k] * u[k] * u[k];
      break;
    case NonlinearityKind::modulus_quadratic:
      for (std::size_t k = 0; k < n; ++k)
        out[k] = std::pow(model.op.eigenvalues[k], 2.0 * beta) * u[k] * std::abs(u[k]);
      break;
  }
}

SolveOutcome picard_solve(const DiagonalModel& model, const StateVector& u0,
                          const Rational& mu, const Rational& p, double horizon,
                          const SolveConfig& cfg) {
  model.op.validate();
  model.nonlinearity.validate();
  if (!check_weight_admissible(mu, p))
    throw InvalidWeightError("picard_solve: weight outside (1/p, 1]");
  if (!(horizon > 0.0)) throw std::invalid_argument("picard_solve: horizon must be positive");
  if (u0.size() != model.op.eigenvalues.size())
    throw std::invalid_argument("picard_solve: state length mismatch");

  const std::size_t n = u0.size();
  std::vector<double> nodes = geometric_window_grid(horizon, cfg.grid);
  const std::size_t m = nodes.size();

  // free trajectory e^{-At} u0 and per-interval propagation weights
  std::vector<StateVector> ustar(m + 1);
  ustar[0] = u0;
  std::vector<std::vector<StepWeights>> weights(m);  // weights[j] for (prev, nodes[j]]
  {
    double prev_t = 0.0, prev_h = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double h = nodes[j] - prev_t;
      weights[j].resize(n);
      for (std::size_t k = 0; k < n; ++k)
        weights[j][k] = step_weights(model.op.eigenvalues[k], h, prev_h);
      ustar[j + 1].resize(n);
      for (std::size_t k = 0; k < n; ++k)
        ustar[j + 1][k] = u0[k] * std::exp(-model.op.eigenvalues[k] * nodes[j]);
      prev_h = h;
      prev_t = nodes[j];
    }
  }

  std::vector<double> times(m + 1);
  times[0] = 0.0;
  std::copy(nodes.begin(), nodes.end(), times.begin() + 1);

  std::vector<StateVector> v(m + 1, StateVector(n, 0.0));
  std::vector<StateVector> vnew(m + 1, StateVector(n, 0.0));
  std::vector<StateVector> g(m + 1, StateVector(n, 0.0));
  StateVector u(n);

  SolveOutcome outcome;
  outcome.trajectory.mu = mu;
  outcome.trajectory.p = p;
  outcome.status = SolveStatus::picard_diverged;

  auto weighted_norm = [&](const std::vector<StateVector>& states) {
    WeightedTrajectory t;
    t.times = times;
    t.states = states;
    t.mu = mu;
    t.p = p;
    return lp_mu_norm(t, Rational(1), model.op);
  };

  double prev_diff = -1.0;
  bool converged = false;

  for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
    outcome.iterations = iter;

    bool exploded = false;
    for (std::size_t j = 0; j <= m && !exploded; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        u[k] = ustar[j][k] + v[j][k];
        if (!std::isfinite(u[k]) || std::abs(u[k]) > cfg.blow_up_magnitude) exploded = true;
      }
      apply_nonlinearity(model, u, g[j]);
    }
    if (exploded) break;

    for (std::size_t k = 0; k < n; ++k) vnew[0][k] = 0.0;
    for (std::size_t j = 1; j <= m; ++j) {
      const auto& w = weights[j - 1];
      const StateVector& ga = g[j >= 2 ? j - 2 : 0];
      const StateVector& gb = g[j - 1];
      const StateVector& gc = g[j];
      for (std::size_t k = 0; k < n; ++k) {
        const double quad = w[k].quadratic
                                ? w[k].wa * ga[k] + w[k].wb * gb[k] + w[k].wc * gc[k]
                                : w[k].wb * gb[k] + w[k].wc * gc[k];
        vnew[j][k] = w[k].decay * vnew[j - 1][k] + quad;
      }
    }

    std::vector<StateVector> diff(m + 1, StateVector(n));
    for (std::size_t j = 0; j <= m; ++j)
      for (std::size_t k = 0; k < n; ++k) diff[j][k] = vnew[j][k] - v[j][k];
    const double dn = weighted_norm(diff);
    if (!std::isfinite(dn)) break;

    if (prev_diff > 0.0) outcome.contraction_ratios.push_back(dn / prev_diff);

    std::vector<StateVector> unew(m + 1, StateVector(n));
    for (std::size_t j = 0; j <= m; ++j)
      for (std::size_t k = 0; k < n; ++k) unew[j][k] = ustar[j][k] + vnew[j][k];
    const double un = weighted_norm(unew);

    v.swap(vnew);

    if (dn <= cfg.picard_tolerance * std::max(un, 1e-30)) {
      converged = true;
      break;
    }
    prev_diff = dn;

    const std::size_t r = outcome.contraction_ratios.size();
    if (iter >= 4 && r >= 2 && outcome.contraction_ratios[r - 1] >= 1.0 &&
        outcome.contraction_ratios[r - 2] >= 1.0)
      break;
  }

  outcome.trajectory.times = times;
  outcome.trajectory.states.resize(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    outcome.trajectory.states[j].resize(n);
    for (std::size_t k = 0; k < n; ++k)
      outcome.trajectory.states[j][k] = ustar[j][k] + v[j][k];
  }
  outcome.status = converged ? SolveStatus::converged_global_on_horizon
                             : SolveStatus::picard_diverged;
  outcome.final_window = horizon;
  return outcome;
}

SolveOutcome continue_maximal(const DiagonalModel& model, const StateVector& u0,
                              const Rational& mu, const Rational& p, const SolveConfig& cfg) {
  model.op.validate();
  model.nonlinearity.validate();
  if (!(cfg.horizon > 0.0))
    throw std::invalid_argument("continue_maximal: horizon must be positive");

  const double tbm1 = 2.0 * model.nonlinearity.beta.to_double() - 1.0;
  const double gauge0 = std::max(blow_up_gauge(u0, model.op, tbm1), 1.0);

  SolveOutcome outcome;
  outcome.trajectory.mu = mu;
  outcome.trajectory.p = p;
  outcome.trajectory.times = {0.0};
  outcome.trajectory.states = {u0};
  outcome.iterations = 0;
  outcome.windows = 0;

  double T = 0.0;
  StateVector state = u0;
  double window = std::min(cfg.initial_window, cfg.horizon);
  DiagonalModel local = model;

  // the bracket is built marginally narrower than the resolution so that
  // its floating-point width never rounds above the configured value
  const double bracket_span = cfg.t_plus_resolution * (1.0 - 1e-9);

  while (true) {
    const double gauge = blow_up_gauge(state, model.op, tbm1);
    if (gauge >= cfg.blow_up_magnitude) {
      outcome.status = SolveStatus::continued_to_blow_up;
      outcome.t_plus = Bracket{T, T + bracket_span};
      break;
    }
    if (T >= cfg.horizon * (1.0 - 1e-12)) {
      outcome.status = SolveStatus::converged_global_on_horizon;
      break;
    }

    window = std::min(window, cfg.horizon - T);
    const double floor = std::max(cfg.min_window, 64.0 * kEps * std::max(T, 1e-12));
    if (window < floor) {
      // Cannot advance further. A gauge that grew by orders of magnitude is
      // a blow-up signature (the remaining existence time is then far below
      // the bracket resolution); otherwise the fixed point simply failed.
      if (gauge >= 1e6 * gauge0) {
        outcome.status = SolveStatus::continued_to_blow_up;
        outcome.t_plus = Bracket{T, T + bracket_span};
      } else {
        outcome.status = SolveStatus::picard_diverged;
      }
      break;
    }

    local.initial.kind = InitialData::Kind::explicit_values;
    local.initial.values = state;
    SolveOutcome sub = picard_solve(local, state, mu, p, window, cfg);

    bool accepted = sub.status == SolveStatus::converged_global_on_horizon;
    if (accepted && window * 0.5 >= floor) {
      // windows that let the gauge run up too far carry too much
      // discretization error near escape; shrink while we still can
      const double end_gauge =
          blow_up_gauge(sub.trajectory.states.back(), model.op, tbm1);
      if (end_gauge > cfg.max_window_growth * std::max(gauge, 1e-300)) accepted = false;
    }

    if (accepted) {
      outcome.windows += 1;
      outcome.iterations += sub.iterations;
      if (outcome.windows == 1) outcome.contraction_ratios = sub.contraction_ratios;

      // splice, watching for a gauge crossing inside the window; nodes that
      // no longer advance representable time are dropped
      bool crossed = false;
      for (std::size_t j = 1; j < sub.trajectory.times.size(); ++j) {
        const double t_abs = T + sub.trajectory.times[j];
        if (t_abs <= outcome.trajectory.times.back()) continue;
        outcome.trajectory.times.push_back(t_abs);
        outcome.trajectory.states.push_back(sub.trajectory.states[j]);
        const double g = blow_up_gauge(sub.trajectory.states[j], model.op, tbm1);
        if (g >= cfg.blow_up_magnitude) {
          outcome.status = SolveStatus::continued_to_blow_up;
          outcome.t_plus = Bracket{t_abs, t_abs + bracket_span};
          crossed = true;
          break;
        }
      }
      if (crossed) break;

      T += window;
      state = sub.trajectory.states.back();
      outcome.final_window = window;
      window = std::min(window * 2.0, cfg.initial_window);
    } else {
      window *= 0.5;
    }
  }
  outcome.final_window = window;
  return outcome;
}

SerrinReport serrin_monitor(const SolveOutcome& outcome, const Rational& mu,
                            const Rational& p, const DiagonalOperator& op) {
  const WeightedTrajectory& traj = outcome.trajectory;
  traj.validate();
  const double pe = p.to_double();

  SerrinReport report;
  report.times = traj.times;
  report.running.resize(traj.times.size(), 0.0);

  auto integrand = [&](std::size_t i) {
    const double nrm = x_beta_norm(traj.states[i], mu, op);
    return std::pow(nrm, pe);
  };

  double acc = 0.0;
  double prev = integrand(0);
  for (std::size_t i = 1; i < traj.times.size(); ++i) {
    const double cur = integrand(i);
    acc += 0.5 * (prev + cur) * (traj.times[i] - traj.times[i - 1]);
    report.running[i] = acc;
    prev = cur;
  }

  const double t_end = outcome.t_plus ? outcome.t_plus->mid() : traj.times.back();
  const double t_ref = 0.5 * t_end;
  double ref_value = 0.0;
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    if (traj.times[i] <= t_ref) ref_value = report.running[i];
    else break;
  }

  const double total = report.running.back();
  if (ref_value > 0.0)
    report.growth_ratio = total / ref_value;
  else
    report.growth_ratio = total > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
  report.verdict =
      report.growth_ratio > 1e3 ? SerrinVerdict::diverging : SerrinVerdict::bounded;
  return report;
}

double fit_log_slope(const WeightedTrajectory& traj, double t_from) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  long count = 0;
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    if (traj.times[i] < t_from) continue;
    double nrm = 0.0;
    for (double v : traj.states[i]) nrm += v * v;
    nrm = std::sqrt(nrm);
    if (nrm <= 0.0) continue;
    const double x = traj.times[i];
    const double y = std::log(nrm);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 2) return -std::numeric_limits<double>::infinity();
  const double denom = count * sxx - sx * sx;
  if (denom == 0.0) return -std::numeric_limits<double>::infinity();
  return (count * sxy - sx * sy) / denom;
}

DecayFit small_data_decay(const DiagonalModel& model, const StateVector& u0,
                          const SolveConfig& cfg) {
  model.op.validate();
  const double a0 = model.op.min_eigenvalue();
  if (model.nonlinearity.kind == NonlinearityKind::quadratic_weighted) {
    const auto nec = necessary_condition_check(u0, model.op, model.nonlinearity.beta);
    if (nec.value >= cfg.small_data_limit)
      throw std::invalid_argument("small_data_decay: data above the smallness cap");
  }

  SolveConfig run = cfg;
  run.horizon = 10.0 / a0;
  const SolveOutcome outcome = continue_maximal(model, u0, Rational(1), Rational(2), run);

  DecayFit fit;
  if (outcome.status != SolveStatus::converged_global_on_horizon) {
    fit.passes = false;
    fit.rate = std::numeric_limits<double>::quiet_NaN();
    fit.note = "run did not stay global: " + to_string(outcome.status);
    return fit;
  }

  fit.rate = fit_log_slope(outcome.trajectory, 0.5 * run.horizon);
  if (fit.rate == -std::numeric_limits<double>::infinity()) {
    fit.passes = true;  // identically zero tail
    fit.note = "vanishing tail";
    return fit;
  }
  fit.passes = fit.rate <= -0.5 * a0;
  return fit;
}

}  // namespace critlab
