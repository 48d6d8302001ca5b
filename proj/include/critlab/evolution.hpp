#pragma once

#include "critlab/norms.hpp"
#include "critlab/rational.hpp"
#include "critlab/spectral_model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace critlab {

/// Nonuniform grid refined near the left endpoint: first node at
/// first_step_fraction * span, then geometric growth of the step, capped
/// at max_step_fraction * span so the far end stays resolved.
struct TimeGridSpec {
  double first_step_fraction{1e-6};
  double growth{1.05};
  double max_step_fraction{0.005};
  int max_nodes{200000};
};

/// Node times for (t0, t1], t0 excluded (the anchor lives with the caller).
std::vector<double> geometric_window_grid(double span, const TimeGridSpec& spec);

struct SolveConfig {
  TimeGridSpec grid{};
  double picard_tolerance{1e-10};  // relative, in the weighted solution norm
  int max_iterations{50};
  double blow_up_magnitude{1e12};
  double horizon{10.0};       // continue_maximal target
  double initial_window{0.5};
  double min_window{1e-15};
  double max_window_growth{1.2};   // gauge growth allowed across one window
  double t_plus_resolution{1e-6};  // blow-up bracket width
  double small_data_limit{1.0};    // conjugated-amplitude cap for decay runs
};

enum class SolveStatus { converged_global_on_horizon, continued_to_blow_up, picard_diverged };

std::string to_string(SolveStatus s);

struct Bracket {
  double lo{0.0};
  double hi{0.0};
  double mid() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
};

struct SolveOutcome {
  WeightedTrajectory trajectory;
  SolveStatus status{SolveStatus::picard_diverged};
  std::optional<Bracket> t_plus;
  int iterations{0};
  std::vector<double> contraction_ratios;  // successive-difference ratios, first window
  int windows{1};
  double final_window{0.0};  // measured window length at the end of continuation
};

/// One fixed-point solve on [0, horizon]: iterates the mild-solution map
/// v -> convolution of the semigroup with G(u,u), u = semigroup * u0 + v,
/// with the linear part exact per mode and the convolution integral by
/// quadratic product integration on the grid. Stops when the successive
/// difference is small in the (mu, p)-weighted X_1 trajectory norm.
SolveOutcome picard_solve(const DiagonalModel& model, const StateVector& u0,
                          const Rational& mu, const Rational& p, double horizon,
                          const SolveConfig& cfg = {});

/// Window-restarted continuation up to cfg.horizon. Windows shrink on
/// fixed-point failure and regrow on success; blow-up is declared when a
/// component magnitude crosses cfg.blow_up_magnitude, with the escape time
/// bracketed to cfg.t_plus_resolution.
SolveOutcome continue_maximal(const DiagonalModel& model, const StateVector& u0,
                              const Rational& mu, const Rational& p,
                              const SolveConfig& cfg = {});

enum class SerrinVerdict { bounded, diverging };

std::string to_string(SerrinVerdict v);

struct SerrinReport {
  std::vector<double> times;
  std::vector<double> running;  // integral_0^t |A^mu u|^p, nondecreasing
  SerrinVerdict verdict{SerrinVerdict::bounded};
  double growth_ratio{1.0};  // final accumulator over its mid-run reference value
};

/// Running integral of |A^mu u(t)|^p along the trajectory. The finiteness
/// dichotomy is operationalized as a growth factor: the verdict is
/// diverging when the accumulator exceeds 1e3 times its value at half of
/// the (estimated) escape time, and bounded otherwise.
SerrinReport serrin_monitor(const SolveOutcome& outcome, const Rational& mu,
                            const Rational& p, const DiagonalOperator& op);

struct DecayFit {
  double rate{0.0};
  bool passes{false};
  std::string note;
};

/// Runs the model to horizon 10 / a_min and fits the tail-half slope of
/// log |u(t)|; passes when the fitted rate is at most -a_min / 2.
/// Data above the configured smallness cap is rejected.
DecayFit small_data_decay(const DiagonalModel& model, const StateVector& u0,
                          const SolveConfig& cfg = {});

/// Least-squares slope of log |u(t)|_{l2} on trajectory times >= t_from.
/// Returns -infinity for identically vanishing tails.
double fit_log_slope(const WeightedTrajectory& traj, double t_from);

/// Componentwise right-hand side of the model.
void apply_nonlinearity(const DiagonalModel& model, const StateVector& u, StateVector& out);

}  // namespace critlab
