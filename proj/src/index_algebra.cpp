#include "critlab/index_algebra.hpp"

#include "critlab/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace critlab {

std::string to_string(SpaceKind k) {
  switch (k) {
    case SpaceKind::bessel: return "bessel";
    case SpaceKind::besov: return "besov";
    case SpaceKind::real_interp: return "real-interp";
    case SpaceKind::complex_interp: return "complex-interp";
  }
  return "?";
}

std::string to_string(BcTag b) {
  switch (b) {
    case BcTag::none: return "none";
    case BcTag::dirichlet: return "dirichlet";
    case BcTag::neumann: return "neumann";
    case BcTag::tangential: return "tangential";
    case BcTag::solenoidal: return "solenoidal";
  }
  return "?";
}

std::string to_string(TermClassValue v) {
  switch (v) {
    case TermClassValue::subcritical: return "subcritical";
    case TermClassValue::critical: return "critical";
    case TermClassValue::violated: return "violated";
  }
  return "?";
}

std::string to_string(Regime r) {
  return r == Regime::critical ? "critical-regime" : "subcritical-regime";
}

void SpaceIndex::validate() const {
  if (integrability <= Rational(1))
    throw std::invalid_argument("SpaceIndex: integrability must exceed 1");
  if ((kind == SpaceKind::besov || kind == SpaceKind::real_interp) && micro <= Rational(1))
    throw std::invalid_argument("SpaceIndex: micro parameter must exceed 1 on a p-scale");
}

Rational sobolev_index(const SpaceIndex& idx, int dim) {
  if (idx.integrability <= Rational(0))
    throw std::invalid_argument("sobolev_index: integrability must be positive");
  if (dim < 1) throw std::invalid_argument("sobolev_index: dimension must be positive");
  return idx.smoothness - Rational(dim) / idx.integrability;
}

void CriticalityTerm::validate() const {
  if (rho < Rational(0)) throw std::invalid_argument("CriticalityTerm: rho must be >= 0");
  if (beta_j < Rational(0) || beta_j >= Rational(1))
    throw std::invalid_argument("CriticalityTerm: beta_j must lie in [0,1)");
}

void CriticalityProblem::validate() const {
  if (beta <= Rational(0) || beta >= Rational(1))
    throw std::invalid_argument("CriticalityProblem: beta must lie in (0,1)");
  if (p <= Rational(1)) throw std::invalid_argument("CriticalityProblem: p must exceed 1");
  for (const auto& t : terms) {
    t.validate();
    if (t.beta_j > beta)
      throw std::invalid_argument("CriticalityProblem: beta_j must not exceed beta");
  }
  if (mu && !check_weight_admissible(*mu, p))
    throw std::invalid_argument("CriticalityProblem: mu must satisfy 1/p < mu <= 1");
}

bool check_weight_admissible(const Rational& mu, const Rational& p) {
  if (p <= Rational(1)) throw std::invalid_argument("check_weight_admissible: p must exceed 1");
  return Rational(1) / p < mu && mu <= Rational(1);
}

TermClass classify_term(const CriticalityProblem& problem, const CriticalityTerm& term) {
  if (!problem.mu) throw InvalidWeightError("classify_term: problem carries no weight mu");
  if (!check_weight_admissible(*problem.mu, problem.p))
    throw InvalidWeightError("classify_term: weight outside (1/p, 1]");
  const Rational w = *problem.mu - Rational(1) / problem.p;  // mu - 1/p
  if (problem.beta <= w || problem.beta >= Rational(1))
    throw InvalidWeightError("classify_term: beta must lie in (mu - 1/p, 1)");
  term.validate();

  const Rational lhs = term.rho * (problem.beta - w) + (term.beta_j - w);
  const Rational rhs = Rational(1) - w;
  TermClass result;
  result.slack = rhs - lhs;
  if (result.slack.sign() > 0)
    result.value = TermClassValue::subcritical;
  else if (result.slack.sign() == 0)
    result.value = TermClassValue::critical;
  else
    result.value = TermClassValue::violated;
  return result;
}

CriticalWeightResult critical_weight(const CriticalityProblem& problem) {
  if (problem.beta <= Rational(0) || problem.beta >= Rational(1))
    throw std::invalid_argument("critical_weight: beta must lie in (0,1)");
  if (problem.p <= Rational(1))
    throw std::invalid_argument("critical_weight: p must exceed 1");

  std::optional<Rational> min_gap;  // min over rho_j > 0 of (1 - beta_j)/rho_j
  for (const auto& t : problem.terms) {
    t.validate();
    if (t.rho.sign() == 0) continue;
    Rational gap = (Rational(1) - t.beta_j) / t.rho;
    if (!min_gap || gap < *min_gap) min_gap = gap;
  }
  if (!min_gap)
    throw NoCriticalTermError("critical_weight: every term has rho_j = 0");

  CriticalWeightResult result;
  result.mu_c = Rational(1) / problem.p + problem.beta - *min_gap;
  result.admissible = Rational(1) / problem.p < result.mu_c && result.mu_c <= Rational(1);
  return result;
}

BilinearWeight critical_weight_bilinear(const Rational& beta, const Rational& p) {
  if (beta <= Rational(0) || beta >= Rational(1))
    throw std::invalid_argument("critical_weight_bilinear: beta must lie in (0,1)");
  if (p <= Rational(1))
    throw std::invalid_argument("critical_weight_bilinear: p must exceed 1");
  BilinearWeight result;
  if (beta > Rational(1, 2)) {
    result.mu_c = Rational(2) * beta - Rational(1) + Rational(1) / p;
    result.regime = Regime::critical;
  } else {
    result.mu_c = Rational(1) / p;  // open infimum: every mu > 1/p works
    result.regime = Regime::subcritical;
  }
  return result;
}

MultilinearWeight multilinear_weight(const std::vector<Rational>& betas, const Rational& p) {
  const int m = static_cast<int>(betas.size());
  if (m < 2) throw std::invalid_argument("multilinear_weight: need at least two exponents");
  if (p <= Rational(1)) throw std::invalid_argument("multilinear_weight: p must exceed 1");
  for (int j = 0; j < m; ++j) {
    if (betas[j] <= Rational(0) || betas[j] >= Rational(1))
      throw std::invalid_argument("multilinear_weight: exponents must lie in (0,1)");
    if (j > 0 && betas[j] > betas[j - 1])
      throw std::invalid_argument("multilinear_weight: exponents must be nonincreasing");
  }

  Rational total(0);
  for (const auto& b : betas) total += b;

  MultilinearWeight result;
  if (total <= Rational(1)) {
    result.mu_c = Rational(1) / p;  // open infimum
    result.regime = Regime::subcritical;
    return result;
  }

  // mu_j = 1/p + (sum_{k<=j} beta_k - 1)/(j-1), j = 2..m
  Rational partial = betas[0];
  Rational best;
  int best_j = 0;
  bool tie = false;
  for (int j = 2; j <= m; ++j) {
    partial += betas[j - 1];
    Rational mu_j = Rational(1) / p + (partial - Rational(1)) / Rational(j - 1);
    if (best_j == 0 || mu_j > best) {
      best = mu_j;
      best_j = j;
      tie = false;
    } else if (mu_j == best) {
      best_j = j;  // keep the largest maximizer
      tie = true;
    }
  }

  result.mu_c = best;
  result.regime = Regime::critical;
  result.pivot = best_j;
  result.tie_warning = tie;

  const Rational w = result.mu_c - Rational(1) / p;
  result.classes.reserve(m);
  for (int j = 1; j <= m; ++j) {
    TermClass c;
    if (j <= best_j) {
      c.value = TermClassValue::critical;
      c.slack = Rational(0);
    } else {
      c.value = TermClassValue::subcritical;
      c.slack = w - betas[j - 1];
    }
    result.classes.push_back(c);
  }
  return result;
}

Rational reiterate(const Rational& alpha, const Rational& beta, const Rational& theta) {
  if (!(alpha < beta)) throw std::invalid_argument("reiterate: requires alpha < beta");
  if (theta <= Rational(0) || theta >= Rational(1))
    throw std::invalid_argument("reiterate: theta must lie in (0,1)");
  return (Rational(1) - theta) * alpha + theta * beta;
}

ShiftedIndex real_interp_shift(const Rational& s, const Rational& tau, const Rational& p) {
  if (s < Rational(0) || s > Rational(1))
    throw std::invalid_argument("real_interp_shift: s must lie in [0,1]");
  if (tau <= Rational(0) || tau >= Rational(1))
    throw std::invalid_argument("real_interp_shift: tau must lie in (0,1)");
  if (p <= Rational(1)) throw std::invalid_argument("real_interp_shift: p must exceed 1");
  if (tau == s) throw ExcludedCaseError("real_interp_shift: tau == s is excluded");

  ShiftedIndex result;
  if (tau > s) {
    result.side = ScaleSide::primal;
    result.index = tau - s;
    result.micro = p;
  } else {
    result.side = ScaleSide::dual;
    result.index = s - tau;
    result.micro = p / (p - Rational(1));  // conjugate exponent
  }
  return result;
}

OpenInterval scale_shift_window(const Rational& beta) {
  if (beta <= Rational(0) || beta >= Rational(1))
    throw std::invalid_argument("scale_shift_window: beta must lie in (0,1)");
  return {Rational(1) - Rational(2) * beta, Rational(2) - Rational(2) * beta};
}

}  // namespace critlab
