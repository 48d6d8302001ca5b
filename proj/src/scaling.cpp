#include "critlab/scaling.hpp"

#include "critlab/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace critlab::scaling {

namespace {
constexpr double kBoundaryTol = 1e-10;

double catmull_rom(double ym1, double y0, double y1, double y2, double t) {
  return y0 + 0.5 * t * (y1 - ym1 +
                         t * (2.0 * ym1 - 5.0 * y0 + 4.0 * y1 - y2 +
                              t * (3.0 * (y0 - y1) + y2 - ym1)));
}
}  // namespace

double LogFrequencyGrid::xi(int index) const {
  return std::exp2(double(j_min + index) / per_octave);
}

void LogFrequencyGrid::validate() const {
  if (per_octave < 1) throw std::invalid_argument("LogFrequencyGrid: per_octave must be >= 1");
  if (j_max <= j_min) throw std::invalid_argument("LogFrequencyGrid: empty grid");
  if (octaves() < 12)
    throw std::invalid_argument("LogFrequencyGrid: must span at least 12 octaves");
}

void RadialProfile::validate() const {
  grid.validate();
  if (static_cast<int>(values.size()) != grid.size())
    throw std::invalid_argument("RadialProfile: value count does not match grid");
  if (dim < 1) throw std::invalid_argument("RadialProfile: dimension must be >= 1");
  for (double v : values)
    if (!std::isfinite(v)) throw std::invalid_argument("RadialProfile: non-finite value");
}

double RadialProfile::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

RadialProfile gaussian_profile(int dim, const LogFrequencyGrid& grid, double amplitude) {
  RadialProfile profile;
  profile.grid = grid;
  profile.dim = dim;
  profile.values.resize(grid.size());
  for (int i = 0; i < grid.size(); ++i) {
    const double x = grid.xi(i);
    profile.values[i] = amplitude * std::exp(-x * x);
  }
  profile.validate();
  return profile;
}

RadialProfile dilate(const RadialProfile& profile, double lambda, bool velocity_scaling) {
  profile.validate();
  if (!(lambda > 0.0)) throw std::invalid_argument("dilate: lambda must be positive");

  const double peak = profile.max_abs();
  const int n = profile.grid.size();
  const double shift = profile.grid.per_octave * 0.5 * std::log2(lambda);
  const double prefactor = velocity_scaling
                               ? std::pow(lambda, 0.5 - 0.5 * profile.dim)
                               : std::pow(lambda, -0.5 * profile.dim);

  // Contractions (lambda > 1) read below the low end, where the profile
  // must be flat for the clamp to be harmless; expansions read beyond the
  // decayed high end.
  if (shift > 0.0 && peak > 0.0) {
    const int one_octave = std::min(profile.grid.per_octave, n - 1);
    if (std::abs(profile.values[one_octave] - profile.values[0]) > 1e-5 * peak)
      throw GridRangeError("dilate: profile is not flat at the low-frequency boundary");
  }
  if (shift < 0.0 && peak > 0.0 && std::abs(profile.values[n - 1]) > kBoundaryTol * peak)
    throw GridRangeError("dilate: profile carries mass at the high-frequency boundary");

  RadialProfile out;
  out.grid = profile.grid;
  out.dim = profile.dim;
  out.values.resize(n);

  auto sample = [&](int idx) {
    if (idx < 0) return profile.values[0];        // flat low end
    if (idx >= n) return 0.0;                     // decayed high end
    return profile.values[idx];
  };

  for (int i = 0; i < n; ++i) {
    const double pos = double(i) - shift;  // source index of xi_i / sqrt(lambda)
    const double fl = std::floor(pos);
    const int i0 = static_cast<int>(fl);
    const double t = pos - fl;
    out.values[i] = prefactor * catmull_rom(sample(i0 - 1), sample(i0), sample(i0 + 1),
                                            sample(i0 + 2), t);
  }

  const double out_peak = out.max_abs();
  if (out_peak > 0.0 && std::abs(out.values[n - 1]) > kBoundaryTol * out_peak)
    throw GridRangeError("dilate: dilated profile escapes the grid");
  return out;
}

double homogeneous_sobolev_norm(const RadialProfile& profile, double s) {
  profile.validate();
  const int n = profile.grid.size();
  const double dy = std::log(2.0) / profile.grid.per_octave;
  const double expo = 2.0 * s + profile.dim;  // xi^{2s} |u|^2 xi^{d-1} dxi = xi^expo |u|^2 dy

  double integral = 0.0;
  double max_term = 0.0;
  double first_term = 0.0, last_term = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = profile.grid.xi(i);
    const double v = profile.values[i];
    const double term = std::pow(x, expo) * v * v;
    max_term = std::max(max_term, term);
    if (i == 0) first_term = term;
    if (i == n - 1) last_term = term;
    const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    integral += w * term;
  }
  if (max_term == 0.0) return 0.0;
  if (first_term > kBoundaryTol * max_term || last_term > kBoundaryTol * max_term)
    throw AccuracyError("homogeneous_sobolev_norm: non-negligible boundary mass");
  return std::sqrt(integral * dy);
}

RatioCheck scaling_ratio_check(const RadialProfile& profile, double s,
                               const std::vector<double>& lambdas) {
  RatioCheck check;
  const double base = homogeneous_sobolev_norm(profile, s);
  if (base <= 0.0) {
    check.degenerate = true;
    return check;
  }

  double sum = 0.0;
  int usable = 0;
  for (double lambda : lambdas) {
    RatioRow row;
    row.lambda = lambda;
    row.ratio = homogeneous_sobolev_norm(dilate(profile, lambda), s) / base;
    if (lambda == 1.0) {
      row.exponent = 0.0;  // 0/0 sample, excluded from the fit
      check.rows.push_back(row);
      continue;
    }
    row.exponent = 2.0 * std::log(row.ratio) / std::log(lambda);
    check.rows.push_back(row);
    sum += row.exponent;
    ++usable;
  }

  if (usable == 0) {
    check.degenerate = true;
    return check;
  }
  check.fitted = sum / usable;
  for (const auto& row : check.rows) {
    if (row.lambda == 1.0) continue;
    check.deviation = std::max(check.deviation, std::abs(row.exponent - check.fitted));
  }
  return check;
}

DeltaRow delta_row(catalog::ExampleId id, const catalog::ParamSet& params,
                   const std::optional<Rational>& delta_override) {
  DeltaRow row;
  row.id = id;
  row.name = catalog::to_string(id);
  row.weight_gap = catalog::formula_mu_c(id, params) - Rational(1) / params.p;
  if (delta_override) {
    row.delta = *delta_override;
    row.note = "injected scaling number";
  } else {
    const auto check = catalog::scaling_delta(id, params);
    row.delta = check.delta;
    row.note = check.note;
  }
  row.equal = (row.delta == row.weight_gap);
  return row;
}

std::vector<DeltaRow> delta_consistency_sweep(
    const std::vector<std::pair<catalog::ExampleId, catalog::ParamSet>>& entries) {
  std::vector<DeltaRow> rows;
  rows.reserve(entries.size());
  for (const auto& [id, params] : entries) rows.push_back(delta_row(id, params));
  return rows;
}

std::vector<std::pair<catalog::ExampleId, catalog::ParamSet>> default_sweep_entries() {
  using catalog::ExampleId;
  using catalog::ParamSet;
  const Rational q2(2), q3(3), p2(2), p4(4);
  std::vector<std::pair<ExampleId, ParamSet>> out;
  out.push_back({ExampleId::fujita_strong, ParamSet{3, q2, p4, Rational(3)}});
  out.push_back({ExampleId::fujita_weak, ParamSet{3, q2, p4, Rational(3)}});
  out.push_back({ExampleId::quasilinear_gradient, ParamSet{3, Rational(6), Rational(8), Rational(3)}});
  out.push_back({ExampleId::cahn_hilliard_weak, ParamSet{3, q3, p4, Rational(2)}});
  out.push_back({ExampleId::vorticity_very_weak, ParamSet{3, q3, p2, std::nullopt}});
  out.push_back({ExampleId::vorticity_weak, ParamSet{3, q2, p4, std::nullopt}});
  out.push_back({ExampleId::convection_diffusion_strong, ParamSet{3, Rational(5, 4), p4, std::nullopt}});
  out.push_back({ExampleId::convection_diffusion_weak, ParamSet{3, q2, p4, std::nullopt}});
  out.push_back({ExampleId::nernst_planck_poisson, ParamSet{3, q2, p4, std::nullopt}});
  out.push_back({ExampleId::chemotaxis_ns, ParamSet{3, q2, p4, std::nullopt}});
  out.push_back({ExampleId::mhd_weak, ParamSet{3, q3, p2, std::nullopt}});
  out.push_back({ExampleId::navier_stokes_scaling, ParamSet{3, q2, p4, std::nullopt}});
  return out;
}

}  // namespace critlab::scaling
