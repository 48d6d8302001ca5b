#pragma once

#include "critlab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace critlab {

enum class SpaceKind { bessel, besov, real_interp, complex_interp };
enum class BcTag { none, dirichlet, neumann, tangential, solenoidal };

std::string to_string(SpaceKind k);
std::string to_string(BcTag b);

/// Exact description of a function-space exponent: s derivatives measured
/// in L_q, with the microscopic parameter p attached for Besov-type scales.
struct SpaceIndex {
  Rational smoothness;            // derivative count s
  Rational integrability;         // q
  Rational micro{2};              // p, only meaningful for besov / real_interp
  SpaceKind kind{SpaceKind::bessel};
  bool homogeneous{false};
  BcTag bc{BcTag::none};

  /// Throws std::invalid_argument when an invariant is broken
  /// (integrability <= 1, or micro <= 1 on a p-sensitive scale).
  void validate() const;
};

/// Sobolev index s - d/q of a space exponent in dimension d.
Rational sobolev_index(const SpaceIndex& idx, int dim);

/// One nonlinearity term: growth exponent rho_j against smoothness beta_j.
struct CriticalityTerm {
  Rational rho;
  Rational beta_j;

  void validate() const;  // rho >= 0, 0 <= beta_j < 1
};

/// The data of the structural hypotheses: target smoothness beta, the term
/// list, time integrability p, and optionally a candidate weight mu.
struct CriticalityProblem {
  Rational beta;
  std::vector<CriticalityTerm> terms;
  Rational p;
  std::optional<Rational> mu;

  void validate() const;
};

enum class TermClassValue { subcritical, critical, violated };

std::string to_string(TermClassValue v);

struct TermClass {
  TermClassValue value{TermClassValue::subcritical};
  Rational slack;  // RHS - LHS of the structural inequality; 0 iff critical
};

/// true iff 1/p < mu <= 1.
bool check_weight_admissible(const Rational& mu, const Rational& p);

/// Classifies one term at the problem's weight mu by the sign of
/// slack = (1 - w) - [rho_j (beta - w) + (beta_j - w)], w = mu - 1/p.
/// Requires mu set and admissible with beta in (mu - 1/p, 1); otherwise
/// throws InvalidWeightError.
TermClass classify_term(const CriticalityProblem& problem, const CriticalityTerm& term);

struct CriticalWeightResult {
  Rational mu_c;
  bool admissible;  // 1/p < mu_c <= 1
};

/// mu_c = 1/p + beta - min_j (1 - beta_j)/rho_j over terms with rho_j > 0.
/// Throws NoCriticalTermError when every rho_j is zero. An out-of-range
/// value is still returned, flagged inadmissible.
CriticalWeightResult critical_weight(const CriticalityProblem& problem);

enum class Regime { critical, subcritical };

std::string to_string(Regime r);

struct BilinearWeight {
  Rational mu_c;
  Regime regime;
};

/// Bilinear special case: mu_c = 2 beta - 1 + 1/p for beta > 1/2. For
/// beta <= 1/2 every admissible weight works; the open infimum 1/p is
/// returned with the subcritical flag.
BilinearWeight critical_weight_bilinear(const Rational& beta, const Rational& p);

struct MultilinearWeight {
  Rational mu_c;
  Regime regime;
  int pivot{0};                   // largest maximizing index l (critical regime)
  std::vector<TermClass> classes; // per-index classes, critical regime only
  bool tie_warning{false};        // several j attained the maximum
};

/// Multilinear weight for a nonincreasing exponent list beta_1 >= ... >= beta_m:
/// mu_j = 1/p + (sum_{k<=j} beta_k - 1)/(j-1), mu_c = max_j mu_j attained at
/// the pivot l; indices j <= l are critical, j > l subcritical. When
/// sum beta_k <= 1 the subcritical regime is reported with the open
/// infimum 1/p. Ties on the maximum return the largest maximizer and set
/// tie_warning.
MultilinearWeight multilinear_weight(const std::vector<Rational>& betas, const Rational& p);

/// Reiteration: the theta-point between scale positions alpha < beta.
Rational reiterate(const Rational& alpha, const Rational& beta, const Rational& theta);

enum class ScaleSide { primal, dual };

struct ShiftedIndex {
  ScaleSide side;
  Rational index;
  Rational micro;
};

/// Real interpolation between scale positions -s and 1-s at parameter tau:
/// lands at index tau - s on the primal scale for tau > s, and at s - tau
/// on the dual scale (conjugate micro p' = p/(p-1)) for tau < s. tau == s
/// is the formula's excluded midpoint.
ShiftedIndex real_interp_shift(const Rational& s, const Rational& tau, const Rational& p);

struct OpenInterval {
  Rational lo;
  Rational hi;
};

/// The admissible shift window (1 - 2 beta, 2 - 2 beta) for re-basing a
/// bilinear problem along its scale.
OpenInterval scale_shift_window(const Rational& beta);

}  // namespace critlab
