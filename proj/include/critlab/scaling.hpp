#pragma once

#include "critlab/catalog.hpp"
#include "critlab/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace critlab::scaling {

/// Uniform grid in log2 frequency: xi_j = 2^{j/J} for j in [j_min, j_max].
struct LogFrequencyGrid {
  int j_min{-224};
  int j_max{96};
  int per_octave{16};  // J

  int size() const { return j_max - j_min + 1; }
  double xi(int index) const;  // index 0 .. size()-1
  int octaves() const { return (j_max - j_min) / per_octave; }
  void validate() const;  // increasing, spans at least 12 octaves
};

/// Radial frequency profile hat-u(xi_j) in dimension d. The profile is
/// assumed negligible beyond the high end of the grid and near-constant
/// below the low end (both validated where it matters).
struct RadialProfile {
  LogFrequencyGrid grid;
  std::vector<double> values;
  int dim{3};

  void validate() const;
  double max_abs() const;
};

/// Gaussian test profile hat-u(xi) = amplitude * e^{-xi^2}.
RadialProfile gaussian_profile(int dim, const LogFrequencyGrid& grid = {},
                               double amplitude = 1.0);

/// Parabolic dilation with parameter lambda (time scale): frequency-side
/// action hat-u_lambda(xi) = lambda^{1/2 - d/2} hat-u(xi / sqrt(lambda)),
/// the velocity normalization. With velocity_scaling = false the amplitude
/// prefactor is dropped (plain dilation u(sqrt(lambda) x), frequency factor
/// lambda^{-d/2}). Off-grid samples interpolate cubically in log xi;
/// samples beyond the high end use the decay assumption, samples below the
/// low end clamp to the boundary value (validated to be flat there).
/// Throws GridRangeError when significant mass leaves the grid.
RadialProfile dilate(const RadialProfile& profile, double lambda,
                     bool velocity_scaling = true);

/// Homogeneous Sobolev norm ( integral xi^{2s} |hat-u|^2 xi^{d-1} dxi )^{1/2}
/// by trapezoid in log xi; the angular measure constant is omitted
/// consistently. Throws AccuracyError when the integrand carries
/// non-negligible boundary mass.
double homogeneous_sobolev_norm(const RadialProfile& profile, double s);

struct RatioRow {
  double lambda;
  double ratio;     // ||T_lambda u|| / ||u||
  double exponent;  // log ratio per unit log of the spatial factor sqrt(lambda)
};

struct RatioCheck {
  double fitted{0.0};     // mean exponent over usable dilations
  double deviation{0.0};  // worst distance of a sample from the fit
  bool degenerate{false}; // no usable dilation (all lambda == 1 or empty)
  std::vector<RatioRow> rows;
};

/// Measures the norm power law of the dilation family at smoothness s. The
/// exponent is reported per unit log of the spatial dilation factor
/// sqrt(lambda); for the velocity action the analytic law is s - (d/2 - 1),
/// vanishing exactly at the scaling-invariant index.
RatioCheck scaling_ratio_check(const RadialProfile& profile, double s,
                               const std::vector<double>& lambdas);

struct DeltaRow {
  catalog::ExampleId id;
  std::string name;
  Rational delta;
  Rational weight_gap;  // mu_c - 1/p
  bool equal;
  std::string note;
};

/// Exact scaling-number consistency across catalog entries.
std::vector<DeltaRow> delta_consistency_sweep(
    const std::vector<std::pair<catalog::ExampleId, catalog::ParamSet>>& entries);

/// Single consistency row with an optional injected scaling number, used as
/// a negative control.
DeltaRow delta_row(catalog::ExampleId id, const catalog::ParamSet& params,
                   const std::optional<Rational>& delta_override = std::nullopt);

/// Default parameter choices that put every catalog entry inside its
/// hypothesis window; the shipped sweep runs over these.
std::vector<std::pair<catalog::ExampleId, catalog::ParamSet>> default_sweep_entries();

}  // namespace critlab::scaling
