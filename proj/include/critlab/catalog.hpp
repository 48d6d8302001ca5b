#pragma once

#include "critlab/index_algebra.hpp"
#include "critlab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace critlab::catalog {

enum class ExampleId {
  fujita_strong,
  fujita_weak,
  quasilinear_gradient,
  cahn_hilliard_weak,
  vorticity_very_weak,
  vorticity_weak,
  convection_diffusion_strong,
  convection_diffusion_weak,
  nernst_planck_poisson,
  chemotaxis_ns,
  mhd_weak,
  navier_stokes_scaling,
};

constexpr int kExampleCount = 12;

std::string to_string(ExampleId id);
std::optional<ExampleId> example_from_string(const std::string& name);

struct ParamSet {
  int d{3};
  Rational q{2};
  Rational p{2};
  std::optional<Rational> kappa;
};

/// One evaluated inequality of an entry's hypothesis block. Informational
/// constraints (the strict instant-regularization variants) do not count
/// against all_constraints_ok.
struct Constraint {
  std::string description;
  std::string inequality;  // rendered with exact values substituted
  bool satisfied{false};
  bool strict{false};
  bool informational{false};
};

struct CriticalityReport {
  ExampleId id{};
  ParamSet params;
  Rational beta;
  Rational mu_c;
  SpaceIndex critical_space;
  std::vector<Constraint> constraints;
  std::optional<Rational> delta;  // scaling number, equals mu_c - 1/p when present
  std::vector<std::string> notes;

  bool all_constraints_ok() const;
};

struct ExampleInfo {
  ExampleId id{};
  std::string name;
  std::string summary;
  std::string reference;  // equation family and functional setting
  bool requires_kappa{false};
  std::optional<int> fixed_d;
  bool has_scaling{false};
};

/// Stable-ordered metadata for every catalog entry.
std::vector<ExampleInfo> list_examples();

/// Full criticality report for one entry. Violated inequalities are
/// reported with satisfied=false, never thrown; only malformed parameters
/// (missing kappa, q or p <= 1, wrong fixed dimension) are errors.
CriticalityReport evaluate(ExampleId id, const ParamSet& params);

/// The entry's closed-form critical weight, kept as an independent
/// regression formula next to the hypothesis-driven computation inside
/// evaluate(). The two must agree exactly; `critlab catalog --check-paper`
/// and the acceptance suite assert that.
Rational formula_mu_c(ExampleId id, const ParamSet& params);

/// Closed-form critical-space smoothness exponent (same role as formula_mu_c).
Rational formula_smoothness(ExampleId id, const ParamSet& params);

struct DeltaCheck {
  Rational delta;
  bool consistent{false};  // delta == mu_c - 1/p, exact
  std::string note;
};

/// Scaling number of the entry's dilation family, derived from the group
/// action on the base norm, compared exactly against mu_c - 1/p.
/// Entries whose scaling holds only on a restricted branch carry a note.
/// Throws std::invalid_argument for an entry without a declared scaling.
DeltaCheck scaling_delta(ExampleId id, const ParamSet& params);

/// The (beta, terms, p) criticality problem behind an entry, for re-deriving
/// its weight through the generic hypothesis machinery.
CriticalityProblem hypothesis_problem(ExampleId id, const ParamSet& params);

/// The shipped regression grid: five valid parameter tuples per entry.
/// `critlab catalog --check-paper` and the acceptance suite replay it.
std::vector<std::pair<ExampleId, ParamSet>> regression_suite();

}  // namespace critlab::catalog
