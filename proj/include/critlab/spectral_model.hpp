#pragma once

#include "critlab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace critlab {

/// Finite coefficient vector of a truncated diagonal model.
using StateVector = std::vector<double>;

enum class EigenvalueRule { dyadic, power, explicit_list };

/// Truncated positive diagonal operator: eigenvalues a_1 <= ... <= a_N.
struct DiagonalOperator {
  EigenvalueRule rule{EigenvalueRule::dyadic};
  double base{2.0};     // dyadic: a_k = base^k
  double gamma{1.0};    // power:  a_k = k^gamma
  std::vector<double> eigenvalues;

  static DiagonalOperator dyadic(int truncation, double base = 2.0);
  static DiagonalOperator power(int truncation, double gamma);
  static DiagonalOperator explicit_list(std::vector<double> values);

  int truncation() const { return static_cast<int>(eigenvalues.size()); }
  double min_eigenvalue() const;
  double max_eigenvalue() const;
  void validate() const;  // strictly positive, nondecreasing, nonempty
};

enum class NonlinearityKind { quadratic_weighted, cubic_damped, modulus_quadratic, zero };

std::string to_string(NonlinearityKind k);

/// Right-hand side G acting componentwise. quadratic_weighted is
/// G_k = a_k^{2 beta} u_k^2; the cubic and modulus variants are the
/// sign-damped and sign-free modifications with matching eigenvalue
/// weights, so the conjugated dynamics are w' + w = -w^3 and w' + w = w|w|.
struct NonlinearitySpec {
  NonlinearityKind kind{NonlinearityKind::quadratic_weighted};
  Rational beta{3, 4};

  void validate() const;  // beta in (1/2, 1) for the weighted kinds
  /// The well-posedness sweet spot beta <= 1 - 1/(2p) is advisory only;
  /// returns a warning string when violated.
  std::optional<std::string> check_with_p(const Rational& p) const;
};

/// Data profile u0_k = w0 * a_k^{1-2 beta}, for which the conjugated initial
/// values are identically w0 (the blow-up threshold sits at w0 = 1).
StateVector threshold_profile(const DiagonalOperator& op, const Rational& beta, double w0);

/// Initial data for a model run: either an explicit vector or a threshold
/// profile described by w0.
struct InitialData {
  enum class Kind { threshold_profile, explicit_values };
  Kind kind{Kind::threshold_profile};
  double w0{0.0};
  StateVector values;

  StateVector realize(const DiagonalOperator& op, const Rational& beta) const;
};

struct DiagonalModel {
  DiagonalOperator op;
  NonlinearitySpec nonlinearity;
  InitialData initial;

  StateVector initial_state() const { return initial.realize(op, nonlinearity.beta); }
};

/// Blow-up time with a floating-point bracket for downstream comparison.
struct BlowUpTime {
  double value;
  double lo;
  double hi;
};

/// Componentwise explicit solution of u' + a u = a^{2 beta} u^2.
/// Throws BlowUpError when t reaches the blow-up time of any component.
StateVector closed_form_state(const StateVector& u0, const DiagonalOperator& op,
                              const Rational& beta, double t);

/// First componentwise blow-up t_k = ln(v0_k/(v0_k - 1))/a_k over components
/// with conjugated data v0_k = a_k^{2 beta - 1} u0_k > 1; absent when every
/// component persists.
std::optional<BlowUpTime> blow_up_time(const StateVector& u0, const DiagonalOperator& op,
                                       const Rational& beta);

struct NecessaryCondition {
  double value;  // max_k a_k^{2 beta - 1} u0_k over the truncation
  bool holds;    // value <= 1
};

/// Finite proxy of the solvability condition on the initial data.
NecessaryCondition necessary_condition_check(const StateVector& u0,
                                             const DiagonalOperator& op, const Rational& beta);

/// Tail analysis of the fractional-power series for dyadic threshold data
/// u0_k = c * base^{k(1-2 beta)}: geometric ratio base^{2(s - 2 beta + 1)},
/// convergent exactly when s < 2 beta - 1; norm of the full series when it
/// converges.
struct SeriesVerdict {
  double ratio;
  bool converges;
  std::optional<double> norm;
};

SeriesVerdict dyadic_profile_series(const Rational& beta, const Rational& s, double c,
                                    double base = 2.0);

/// Truncated fractional-power norm (sum_k a_k^{2s} |u0_k|^2)^{1/2}.
double power_norm(const StateVector& u0, const Rational& s, const DiagonalOperator& op);

struct PowerNormReport {
  double truncated;
  std::optional<SeriesVerdict> tail;  // present for dyadic threshold profiles
};

/// power_norm plus the analytic tail verdict when the model's data is a
/// threshold profile over a dyadic rule.
PowerNormReport power_norm_report(const DiagonalModel& model, const Rational& s);

struct DominationCheck {
  bool holds;
  double max_violation;
};

/// For nonpositive data, verifies |u_k(t)| <= |u0_k| e^{-a_k t} on the grid.
/// Throws std::invalid_argument when a positive component is present.
DominationCheck semigroup_domination_check(const StateVector& u0, const DiagonalOperator& op,
                                           const Rational& beta,
                                           const std::vector<double>& time_grid);

}  // namespace critlab
