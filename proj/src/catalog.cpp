#include "critlab/catalog.hpp"

#include "critlab/errors.hpp"

#include <stdexcept>

namespace critlab::catalog {

namespace {

const Rational kHalf(1, 2);
const Rational kOne(1);
const Rational kTwo(2);

struct ScalingLaw {
  Rational amplitude;   // gamma: state scales by lambda^gamma
  Rational space;       // eps: space dilates by lambda^eps (1/2 second order, 1/4 fourth order)
  std::string note;
};

// Static shape of one catalog entry; the value-level formulas live in
// the switch blocks below.
struct EntryShape {
  std::string name;
  std::string summary;
  std::string reference;
  bool requires_kappa;
  std::optional<int> fixed_d;
  Rational base_smoothness;   // smoothness of the setting's base space
  Rational order;             // derivatives spanned by one interpolation unit
  BcTag bc;
  bool homogeneous;
};

const EntryShape& shape(ExampleId id) {
  static const EntryShape table[kExampleCount] = {
      {"fujita_strong", "reaction-diffusion with power nonlinearity, strong setting",
       "Dirichlet heat equation with source |u|^(kappa-1) u, L_q base", true, std::nullopt,
       Rational(0), kTwo, BcTag::dirichlet, false},
      {"fujita_weak", "reaction-diffusion with power nonlinearity, weak setting",
       "Dirichlet heat equation with source |u|^(kappa-1) u, dual H^-1_q base", true,
       std::nullopt, Rational(-1), kTwo, BcTag::dirichlet, false},
      {"quasilinear_gradient", "quasilinear diffusion with gradient-power source",
       "Neumann problem d_t u - div(a(u) grad u) = |grad u|^kappa, L_q base", true,
       std::nullopt, Rational(0), kTwo, BcTag::neumann, false},
      {"cahn_hilliard_weak", "Cahn-Hilliard phase separation, weak setting",
       "fourth-order Neumann problem with potential growth kappa, H^-2_q base", true,
       std::nullopt, Rational(-2), Rational(4), BcTag::neumann, false},
      {"vorticity_very_weak", "vorticity form of the Navier-Stokes flow, very weak setting",
       "3-D vorticity transport under Navier slip, H^-2_q solenoidal base", false, 3,
       Rational(-2), kTwo, BcTag::tangential, false},
      {"vorticity_weak", "vorticity form of the Navier-Stokes flow, weak setting",
       "3-D vorticity transport under Navier slip, H^-1_q solenoidal base", false, 3,
       Rational(-1), kTwo, BcTag::tangential, false},
      {"convection_diffusion_strong", "nonlocal convection-diffusion, strong setting",
       "Neumann problem d_t u - Lap u = -div(u grad w), -Lap w = u, L_q base", false,
       std::nullopt, Rational(0), kTwo, BcTag::neumann, false},
      {"convection_diffusion_weak", "nonlocal convection-diffusion, weak setting",
       "Neumann problem d_t u - Lap u = -div(u grad w), dual H^-1_q base", false,
       std::nullopt, Rational(-1), kTwo, BcTag::neumann, false},
      {"nernst_planck_poisson", "Nernst-Planck-Poisson ion transport",
       "two charged species drift-diffusing in their own potential, weak base", false,
       std::nullopt, Rational(-1), kTwo, BcTag::neumann, false},
      {"chemotaxis_ns", "chemotaxis coupled to Navier-Stokes flow",
       "velocity / chemical / cell-density system, solenoidal L_q base for the flow", false,
       std::nullopt, Rational(0), kTwo, BcTag::solenoidal, false},
      {"mhd_weak", "magneto-hydrodynamics, weak setting",
       "3-D velocity / magnetic-field system, dual H^-1_q solenoidal base", false, 3,
       Rational(-1), kTwo, BcTag::solenoidal, false},
      {"navier_stokes_scaling", "Navier-Stokes flow on the whole space",
       "velocity formulation on R^d, homogeneous solenoidal L_q base", false, std::nullopt,
       Rational(0), kTwo, BcTag::solenoidal, true},
  };
  return table[static_cast<int>(id)];
}

void validate_params(ExampleId id, const ParamSet& params) {
  const EntryShape& s = shape(id);
  if (params.d < 1) throw std::invalid_argument("catalog: dimension must be >= 1");
  if (s.fixed_d && params.d != *s.fixed_d)
    throw std::invalid_argument("catalog: entry '" + s.name + "' is fixed to d = " +
                                std::to_string(*s.fixed_d));
  if (params.q <= kOne) throw std::invalid_argument("catalog: q must exceed 1");
  if (params.p <= kOne) throw std::invalid_argument("catalog: p must exceed 1");
  if (s.requires_kappa && !params.kappa)
    throw std::invalid_argument("catalog: entry '" + s.name + "' requires kappa");
  if (id == ExampleId::fujita_strong || id == ExampleId::fujita_weak) {
    if (*params.kappa <= kOne)
      throw std::invalid_argument("catalog: kappa must exceed 1");
  } else if (id == ExampleId::quasilinear_gradient) {
    if (*params.kappa <= kTwo)
      throw std::invalid_argument("catalog: kappa must exceed 2 for the gradient source");
  } else if (id == ExampleId::cahn_hilliard_weak) {
    if (*params.kappa <= Rational(0))
      throw std::invalid_argument("catalog: kappa must be positive");
  }
}

Rational entry_beta(ExampleId id, const ParamSet& params) {
  const Rational dq = Rational(params.d) / params.q;
  switch (id) {
    case ExampleId::fujita_strong:
      return dq / kTwo * (kOne - kOne / *params.kappa);
    case ExampleId::fujita_weak:
      return kHalf * (kOne + dq) * (kOne - kOne / *params.kappa);
    case ExampleId::quasilinear_gradient:
      return kHalf + dq / kTwo * (kOne - kOne / *params.kappa);
    case ExampleId::cahn_hilliard_weak:
      return kHalf + dq * *params.kappa / (Rational(4) * (*params.kappa + kOne));
    case ExampleId::vorticity_very_weak:
      return kHalf + Rational(3) / (Rational(4) * params.q);
    case ExampleId::vorticity_weak:
      return (kOne + Rational(3) / params.q) / Rational(4);
    case ExampleId::convection_diffusion_strong:
      return dq / Rational(4);
    case ExampleId::convection_diffusion_weak:
    case ExampleId::nernst_planck_poisson:
    case ExampleId::chemotaxis_ns:
    case ExampleId::navier_stokes_scaling:
      return (kOne + dq) / Rational(4);
    case ExampleId::mhd_weak:
      return kHalf + Rational(3) / (Rational(4) * params.q);
  }
  throw std::logic_error("entry_beta: unreachable");
}

std::vector<CriticalityTerm> entry_terms(ExampleId id, const ParamSet& params,
                                         const Rational& beta) {
  switch (id) {
    case ExampleId::fujita_strong:
    case ExampleId::fujita_weak:
      return {{*params.kappa - kOne, beta}};
    case ExampleId::quasilinear_gradient:
      // gradient-power source and the coefficient commutator share the
      // exponent pattern; the Lipschitz remainder is handled separately
      return {{*params.kappa - kOne, beta}, {*params.kappa - kOne, beta}};
    case ExampleId::cahn_hilliard_weak:
      return {{*params.kappa, beta}};
    default:
      return {{kOne, beta}};  // bilinear transport terms
  }
}

std::optional<ScalingLaw> entry_scaling(ExampleId id, const ParamSet& params) {
  switch (id) {
    case ExampleId::fujita_strong:
    case ExampleId::fujita_weak:
      return ScalingLaw{kOne / (*params.kappa - kOne), kHalf, ""};
    case ExampleId::quasilinear_gradient:
      return ScalingLaw{-(*params.kappa - kTwo) / (kTwo * (*params.kappa - kOne)), kHalf,
                        "scaling holds for constant diffusion coefficient a(u) = const"};
    case ExampleId::cahn_hilliard_weak:
      return ScalingLaw{kOne / (kTwo * *params.kappa), Rational(1, 4),
                        "scaling holds for the pure-power potential branch"};
    case ExampleId::vorticity_very_weak:
    case ExampleId::vorticity_weak:
      return ScalingLaw{kOne, kHalf, "curl of the velocity dilation"};
    case ExampleId::convection_diffusion_strong:
    case ExampleId::convection_diffusion_weak:
    case ExampleId::nernst_planck_poisson:
      return ScalingLaw{kOne, kHalf, ""};
    case ExampleId::chemotaxis_ns:
    case ExampleId::mhd_weak:
    case ExampleId::navier_stokes_scaling:
      return ScalingLaw{kHalf, kHalf, ""};
  }
  return std::nullopt;
}

std::string render(const Rational& lhs, const char* op, const Rational& rhs) {
  return lhs.str() + std::string(" ") + op + " " + rhs.str();
}

Constraint make_constraint(std::string description, const Rational& lhs, const char* op,
                           const Rational& rhs, bool informational = false) {
  Constraint c;
  c.description = std::move(description);
  c.inequality = render(lhs, op, rhs);
  const std::string o(op);
  if (o == "<")
    c.satisfied = lhs < rhs, c.strict = true;
  else if (o == "<=")
    c.satisfied = lhs <= rhs, c.strict = false;
  else if (o == ">")
    c.satisfied = lhs > rhs, c.strict = true;
  else if (o == ">=")
    c.satisfied = lhs >= rhs, c.strict = false;
  else
    throw std::logic_error("make_constraint: unknown operator");
  c.informational = informational;
  return c;
}

std::vector<Constraint> entry_constraints(ExampleId id, const ParamSet& params,
                                          const Rational& beta, const Rational& mu_c) {
  const Rational d(params.d);
  const Rational dq = d / params.q;
  const Rational inv_p = kOne / params.p;
  const Rational two_p = kTwo / params.p;
  std::vector<Constraint> out;

  auto weight_pair = [&](const Rational& lhs, const Rational& bound) {
    out.push_back(make_constraint("weight admissible (mu_c <= 1)", lhs, "<=", bound));
    out.push_back(make_constraint("instant regularization", lhs, "<", bound, true));
  };

  switch (id) {
    case ExampleId::fujita_strong: {
      const Rational k = *params.kappa;
      out.push_back(make_constraint("supercritical growth", k, ">", kOne + kTwo / d));
      out.push_back(make_constraint("q-window floor (beta < 1)", params.q, ">",
                                    d * (k - kOne) / (kTwo * k)));
      out.push_back(make_constraint("q-window ceiling (mu_c > 1/p)", params.q, "<",
                                    d * (k - kOne) / kTwo));
      weight_pair(two_p + dq, kTwo * k / (k - kOne));
      break;
    }
    case ExampleId::fujita_weak: {
      const Rational k = *params.kappa;
      out.push_back(make_constraint("duality pairing feasible", kOne / d + kOne / params.q,
                                    "<", kOne));
      out.push_back(make_constraint("beta < 1", params.q, ">", d * (k - kOne) / (k + kOne)));
      out.push_back(
          make_constraint("mu_c > 1/p", dq, ">", (Rational(3) - k) / (k - kOne)));
      weight_pair(two_p + dq, (k + kOne) / (k - kOne));
      break;
    }
    case ExampleId::quasilinear_gradient: {
      const Rational k = *params.kappa;
      out.push_back(make_constraint("gradient growth", k, ">", kTwo));
      out.push_back(make_constraint("beta < 1", dq, "<", k / (k - kOne)));
      out.push_back(make_constraint("mu_c > 1/p (automatic for kappa > 2)", mu_c, ">", inv_p));
      weight_pair(two_p + dq, k / (k - kOne));
      // Lipschitz remainder of the coefficient: (rho, beta_j) = (2, mu_c - 1/p)
      // stays strictly subcritical exactly when beta < 1.
      out.push_back(make_constraint("coefficient remainder subcritical", beta, "<", kOne));
      break;
    }
    case ExampleId::cahn_hilliard_weak: {
      const Rational k = *params.kappa;
      out.push_back(make_constraint("potential growth", k, ">", kTwo / (d + kTwo)));
      out.push_back(
          make_constraint("beta < 1", params.q, ">", d * k / (kTwo * (k + kOne))));
      out.push_back(make_constraint("mu_c > 1/p (automatic for kappa >= 1)", mu_c, ">", inv_p));
      weight_pair(two_p + dq / kTwo, (k + kOne) / k);
      break;
    }
    case ExampleId::vorticity_very_weak: {
      out.push_back(make_constraint("beta < 1", params.q, ">", Rational(3, 2)));
      weight_pair(two_p + dq, kTwo);
      break;
    }
    case ExampleId::vorticity_weak: {
      out.push_back(make_constraint("beta < 1", params.q, ">", kOne));
      out.push_back(
          make_constraint("exponent balance and mu_c > 1/p", params.q, "<", Rational(3)));
      weight_pair(two_p + dq, Rational(3));
      break;
    }
    case ExampleId::convection_diffusion_strong: {
      out.push_back(make_constraint("dimension", d, ">=", Rational(3)));
      out.push_back(make_constraint("beta < 1", params.q, ">", d / Rational(4)));
      out.push_back(make_constraint("mu_c > 1/p", params.q, "<", d / kTwo));
      weight_pair(two_p + dq, Rational(4));
      break;
    }
    case ExampleId::convection_diffusion_weak: {
      out.push_back(make_constraint("dimension", d, ">=", kTwo));
      out.push_back(make_constraint("beta < 1", params.q, ">", d / Rational(3)));
      out.push_back(make_constraint("mu_c > 1/p", params.q, "<", d));
      weight_pair(inv_p + dq / kTwo, Rational(3, 2));
      break;
    }
    case ExampleId::nernst_planck_poisson:
    case ExampleId::chemotaxis_ns:
    case ExampleId::navier_stokes_scaling: {
      out.push_back(make_constraint("beta < 1", params.q, ">", d / Rational(3)));
      out.push_back(make_constraint("mu_c > 1/p", params.q, "<", d));
      weight_pair(two_p + dq, Rational(3));
      break;
    }
    case ExampleId::mhd_weak: {
      out.push_back(make_constraint("beta < 1", params.q, ">", Rational(3, 2)));
      out.push_back(make_constraint("mu_c > 1/p", mu_c, ">", inv_p));
      weight_pair(two_p + dq, kTwo);
      break;
    }
  }
  return out;
}

std::vector<std::string> entry_notes(ExampleId id) {
  switch (id) {
    case ExampleId::fujita_weak:
      return {"smoothness follows the derivation value d/q - 2/(kappa-1); the circulated "
              "variant d/q - 1/(kappa-1) is inconsistent with 2(mu_c - 1/p) - 1 and not used"};
    case ExampleId::quasilinear_gradient:
      return {"critical weight follows the derivation value 1/p + d/2q + (kappa-2)/(2(kappa-1)); "
              "a sign-flipped variant is inconsistent with the hypothesis block and not used",
              "scaling declared for a(u) = const only"};
    case ExampleId::cahn_hilliard_weak:
      return {"smoothness follows the derivation value d/q - 2/kappa; the circulated variant "
              "d/q - kappa/2 is inconsistent with 4(mu_c - 1/p) - 2 and not used",
              "scaling declared for the pure-power potential branch only"};
    case ExampleId::vorticity_very_weak:
    case ExampleId::vorticity_weak:
      return {"solenoidal scale with vanishing tangential trace"};
    case ExampleId::convection_diffusion_strong:
    case ExampleId::convection_diffusion_weak:
      return {"mean-zero base space; the potential is eliminated through the Neumann solver"};
    case ExampleId::nernst_planck_poisson:
      return {"report covers the ion concentrations; the potential component sits two "
              "derivatives higher (exponent d/q)"};
    case ExampleId::chemotaxis_ns:
      return {"report covers the velocity component; cell density sits at exponent d/q - 2, "
              "the chemical potential at d/q"};
    case ExampleId::mhd_weak:
      return {"velocity and magnetic components share the exponent"};
    default:
      return {};
  }
}

}  // namespace

std::string to_string(ExampleId id) { return shape(id).name; }

std::optional<ExampleId> example_from_string(const std::string& name) {
  for (int i = 0; i < kExampleCount; ++i) {
    auto id = static_cast<ExampleId>(i);
    if (shape(id).name == name) return id;
  }
  return std::nullopt;
}

bool CriticalityReport::all_constraints_ok() const {
  for (const auto& c : constraints)
    if (!c.informational && !c.satisfied) return false;
  return true;
}

std::vector<ExampleInfo> list_examples() {
  std::vector<ExampleInfo> out;
  out.reserve(kExampleCount);
  for (int i = 0; i < kExampleCount; ++i) {
    auto id = static_cast<ExampleId>(i);
    const EntryShape& s = shape(id);
    ExampleInfo info;
    info.id = id;
    info.name = s.name;
    info.summary = s.summary;
    info.reference = s.reference;
    info.requires_kappa = s.requires_kappa;
    info.fixed_d = s.fixed_d;
    info.has_scaling = entry_scaling(id, ParamSet{3, Rational(2), Rational(2), Rational(3)})
                           .has_value();
    out.push_back(std::move(info));
  }
  return out;
}

CriticalityProblem hypothesis_problem(ExampleId id, const ParamSet& params) {
  validate_params(id, params);
  CriticalityProblem problem;
  problem.beta = entry_beta(id, params);
  problem.terms = entry_terms(id, params, problem.beta);
  problem.p = params.p;
  return problem;
}

Rational formula_mu_c(ExampleId id, const ParamSet& params) {
  validate_params(id, params);
  const Rational dq = Rational(params.d) / params.q;
  const Rational inv_p = kOne / params.p;
  switch (id) {
    case ExampleId::fujita_strong:
      return inv_p + dq / kTwo - kOne / (*params.kappa - kOne);
    case ExampleId::fujita_weak:
      return inv_p + kHalf * (kOne + dq) - kOne / (*params.kappa - kOne);
    case ExampleId::quasilinear_gradient:
      return inv_p + dq / kTwo + (*params.kappa - kTwo) / (kTwo * (*params.kappa - kOne));
    case ExampleId::cahn_hilliard_weak:
      return inv_p + dq / Rational(4) + (*params.kappa - kOne) / (kTwo * *params.kappa);
    case ExampleId::vorticity_very_weak:
      return inv_p + Rational(3) / (kTwo * params.q);
    case ExampleId::vorticity_weak:
      return inv_p + Rational(3) / (kTwo * params.q) - kHalf;
    case ExampleId::convection_diffusion_strong:
      return inv_p + dq / kTwo - kOne;
    case ExampleId::convection_diffusion_weak:
    case ExampleId::nernst_planck_poisson:
    case ExampleId::chemotaxis_ns:
    case ExampleId::navier_stokes_scaling:
      return inv_p + dq / kTwo - kHalf;
    case ExampleId::mhd_weak:
      return inv_p + Rational(3) / (kTwo * params.q);
  }
  throw std::logic_error("formula_mu_c: unreachable");
}

Rational formula_smoothness(ExampleId id, const ParamSet& params) {
  validate_params(id, params);
  const Rational dq = Rational(params.d) / params.q;
  switch (id) {
    case ExampleId::fujita_strong:
    case ExampleId::fujita_weak:
      return dq - kTwo / (*params.kappa - kOne);
    case ExampleId::quasilinear_gradient:
      return dq + (*params.kappa - kTwo) / (*params.kappa - kOne);
    case ExampleId::cahn_hilliard_weak:
      return dq - kTwo / *params.kappa;
    case ExampleId::vorticity_very_weak:
    case ExampleId::vorticity_weak:
      return Rational(3) / params.q - kTwo;
    case ExampleId::convection_diffusion_strong:
    case ExampleId::convection_diffusion_weak:
    case ExampleId::nernst_planck_poisson:
      return dq - kTwo;
    case ExampleId::chemotaxis_ns:
    case ExampleId::navier_stokes_scaling:
      return dq - kOne;
    case ExampleId::mhd_weak:
      return Rational(3) / params.q - kOne;
  }
  throw std::logic_error("formula_smoothness: unreachable");
}

CriticalityReport evaluate(ExampleId id, const ParamSet& params) {
  validate_params(id, params);
  const EntryShape& s = shape(id);

  CriticalityReport report;
  report.id = id;
  report.params = params;
  report.beta = entry_beta(id, params);
  report.notes = entry_notes(id);

  // Route the weight through the generic hypothesis machinery whenever the
  // exponents fit its preconditions; otherwise fall back to the closed form
  // so that out-of-window parameters still produce a report.
  bool hypothesis_ok = report.beta > Rational(0) && report.beta < kOne;
  if (hypothesis_ok) {
    CriticalityProblem problem;
    problem.beta = report.beta;
    problem.terms = entry_terms(id, params, report.beta);
    problem.p = params.p;
    report.mu_c = critical_weight(problem).mu_c;
  } else {
    report.mu_c = formula_mu_c(id, params);
    report.notes.push_back("beta outside (0,1): hypothesis block void, closed-form weight reported");
  }

  report.critical_space.smoothness =
      s.base_smoothness + s.order * (report.mu_c - kOne / params.p);
  report.critical_space.integrability = params.q;
  report.critical_space.micro = params.p;
  report.critical_space.kind = SpaceKind::besov;
  report.critical_space.homogeneous = s.homogeneous;
  report.critical_space.bc = s.bc;

  report.constraints = entry_constraints(id, params, report.beta, report.mu_c);

  if (auto law = entry_scaling(id, params)) {
    // Dilation bookkeeping: amplitude lambda^gamma against the base norm's
    // response lambda^{eps (d/q - s0)} gives the scaling number.
    report.delta = -law->amplitude +
                   law->space * (Rational(params.d) / params.q - s.base_smoothness);
    if (!law->note.empty()) report.notes.push_back(law->note);
  }
  return report;
}

std::vector<std::pair<ExampleId, ParamSet>> regression_suite() {
  using E = ExampleId;
  auto ps = [](int d, Rational q, Rational p,
               std::optional<Rational> kappa = std::nullopt) {
    ParamSet s;
    s.d = d;
    s.q = std::move(q);
    s.p = std::move(p);
    s.kappa = std::move(kappa);
    return s;
  };
  std::vector<std::pair<ExampleId, ParamSet>> suite;
  auto add = [&](ExampleId id, ParamSet s) { suite.emplace_back(id, std::move(s)); };

  add(E::fujita_strong, ps(3, Rational(2), Rational(4), Rational(3)));
  add(E::fujita_strong, ps(3, Rational(5, 2), Rational(2), Rational(3)));
  add(E::fujita_strong, ps(2, Rational(3, 2), Rational(4), Rational(4)));
  add(E::fujita_strong, ps(4, Rational(3), Rational(5), Rational(3)));
  add(E::fujita_strong, ps(1, Rational(3, 2), Rational(4), Rational(5)));

  add(E::fujita_weak, ps(3, Rational(2), Rational(4), Rational(3)));
  add(E::fujita_weak, ps(3, Rational(5, 2), Rational(10), Rational(3)));
  add(E::fujita_weak, ps(2, Rational(3), Rational(4), Rational(4)));
  add(E::fujita_weak, ps(3, Rational(4), Rational(8), Rational(5)));
  add(E::fujita_weak, ps(4, Rational(5), Rational(4), Rational(3)));

  add(E::quasilinear_gradient, ps(3, Rational(6), Rational(8), Rational(3)));
  add(E::quasilinear_gradient, ps(3, Rational(4), Rational(8), Rational(5, 2)));
  add(E::quasilinear_gradient, ps(2, Rational(3), Rational(10), Rational(4)));
  add(E::quasilinear_gradient, ps(3, Rational(5), Rational(5), Rational(3)));
  add(E::quasilinear_gradient, ps(1, Rational(2), Rational(4), Rational(7, 2)));

  add(E::cahn_hilliard_weak, ps(3, Rational(3), Rational(4), Rational(2)));
  add(E::cahn_hilliard_weak, ps(3, Rational(2), Rational(8), Rational(2)));
  add(E::cahn_hilliard_weak, ps(2, Rational(2), Rational(4), Rational(1)));
  add(E::cahn_hilliard_weak, ps(3, Rational(5, 4), Rational(2), Rational(1, 2)));
  add(E::cahn_hilliard_weak, ps(3, Rational(4), Rational(4), Rational(3)));

  add(E::vorticity_very_weak, ps(3, Rational(3), Rational(2)));
  add(E::vorticity_very_weak, ps(3, Rational(2), Rational(4)));
  add(E::vorticity_very_weak, ps(3, Rational(4), Rational(3)));
  add(E::vorticity_very_weak, ps(3, Rational(5, 2), Rational(4)));
  add(E::vorticity_very_weak, ps(3, Rational(6), Rational(2)));

  add(E::vorticity_weak, ps(3, Rational(2), Rational(4)));
  add(E::vorticity_weak, ps(3, Rational(3, 2), Rational(2)));
  add(E::vorticity_weak, ps(3, Rational(5, 2), Rational(2)));
  add(E::vorticity_weak, ps(3, Rational(2), Rational(2)));
  add(E::vorticity_weak, ps(3, Rational(11, 4), Rational(5)));

  add(E::convection_diffusion_strong, ps(3, Rational(5, 4), Rational(4)));
  add(E::convection_diffusion_strong, ps(3, Rational(7, 5), Rational(2)));
  add(E::convection_diffusion_strong, ps(4, Rational(3, 2), Rational(4)));
  add(E::convection_diffusion_strong, ps(4, Rational(9, 5), Rational(2)));
  add(E::convection_diffusion_strong, ps(5, Rational(2), Rational(4)));

  add(E::convection_diffusion_weak, ps(3, Rational(2), Rational(4)));
  add(E::convection_diffusion_weak, ps(2, Rational(3, 2), Rational(2)));
  add(E::convection_diffusion_weak, ps(3, Rational(5, 2), Rational(2)));
  add(E::convection_diffusion_weak, ps(4, Rational(3), Rational(4)));
  add(E::convection_diffusion_weak, ps(2, Rational(5, 4), Rational(4)));

  add(E::nernst_planck_poisson, ps(3, Rational(2), Rational(4)));
  add(E::nernst_planck_poisson, ps(3, Rational(3, 2), Rational(2)));
  add(E::nernst_planck_poisson, ps(3, Rational(5, 2), Rational(2)));
  add(E::nernst_planck_poisson, ps(2, Rational(6, 5), Rational(4)));
  add(E::nernst_planck_poisson, ps(4, Rational(2), Rational(5)));

  add(E::chemotaxis_ns, ps(3, Rational(2), Rational(4)));
  add(E::chemotaxis_ns, ps(3, Rational(3, 2), Rational(2)));
  add(E::chemotaxis_ns, ps(3, Rational(5, 2), Rational(2)));
  add(E::chemotaxis_ns, ps(2, Rational(6, 5), Rational(4)));
  add(E::chemotaxis_ns, ps(4, Rational(2), Rational(5)));

  add(E::mhd_weak, ps(3, Rational(3), Rational(2)));
  add(E::mhd_weak, ps(3, Rational(2), Rational(4)));
  add(E::mhd_weak, ps(3, Rational(4), Rational(3)));
  add(E::mhd_weak, ps(3, Rational(5, 2), Rational(4)));
  add(E::mhd_weak, ps(3, Rational(6), Rational(2)));

  add(E::navier_stokes_scaling, ps(3, Rational(2), Rational(4)));
  add(E::navier_stokes_scaling, ps(3, Rational(3, 2), Rational(2)));
  add(E::navier_stokes_scaling, ps(3, Rational(5, 2), Rational(2)));
  add(E::navier_stokes_scaling, ps(2, Rational(6, 5), Rational(4)));
  add(E::navier_stokes_scaling, ps(4, Rational(2), Rational(5)));

  return suite;
}

DeltaCheck scaling_delta(ExampleId id, const ParamSet& params) {
  auto law = entry_scaling(id, params);
  if (!law)
    throw std::invalid_argument("scaling_delta: entry '" + to_string(id) +
                                "' declares no scaling");
  validate_params(id, params);
  DeltaCheck check;
  check.delta = -law->amplitude +
                law->space * (Rational(params.d) / params.q - shape(id).base_smoothness);
  const Rational w = formula_mu_c(id, params) - kOne / params.p;
  check.consistent = (check.delta == w);
  check.note = law->note;
  return check;
}

}  // namespace critlab::catalog
