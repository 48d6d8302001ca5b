#include "critlab/fujita.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace critlab;

namespace {

// scalar comparison problem m' = -m + m^kappa by classic fourth-order
// stepping with a proportional step; returns (times, values) up to escape
// or the horizon
struct ScalarLowerBound {
  std::vector<double> times;
  std::vector<double> values;
  bool blew_up{false};
  double t_end{0.0};
};

ScalarLowerBound integrate_scalar(double m0, double kappa, double horizon) {
  ScalarLowerBound out;
  auto f = [&](double m) { return -m + std::pow(m, kappa); };
  double t = 0.0, m = m0;
  out.times.push_back(t);
  out.values.push_back(m);
  while (t < horizon) {
    const double h = std::min(1e-3 / std::max(1.0, std::abs(f(m)) / std::max(m, 1e-12)),
                              horizon - t);
    const double k1 = f(m);
    const double k2 = f(m + 0.5 * h * k1);
    const double k3 = f(m + 0.5 * h * k2);
    const double k4 = f(m + h * k3);
    m += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += h;
    out.times.push_back(t);
    out.values.push_back(m);
    if (!std::isfinite(m) || m > 1e14) {
      out.blew_up = true;
      break;
    }
  }
  out.t_end = t;
  return out;
}

}  // namespace

TEST_CASE("zero data stays zero") {
  auto result = fujita_1d_solve(Rational(5), 32, {}, Rational(1, 2), Rational(2), 1.0);
  CHECK(result.outcome.status == SolveStatus::converged_global_on_horizon);
  for (const auto& state : result.outcome.trajectory.states)
    for (double c : state) CHECK(c == 0.0);
  CHECK(result.serrin.verdict == SerrinVerdict::bounded);
}

TEST_CASE("kappa must exceed 3 in one dimension") {
  CHECK_THROWS_AS(fujita_1d_solve(Rational(2), 32, {0.1}, Rational(1, 2), Rational(2), 1.0),
                  std::invalid_argument);
}

TEST_CASE("critical weight helper at q = 2") {
  CHECK(fujita_critical_mu(Rational(5), Rational(2)) == Rational(1, 2));
  CHECK(fujita_critical_mu(Rational(5), Rational(4)) == Rational(1, 4));
  CHECK(fujita_critical_mu(Rational(4), Rational(2)) == Rational(5, 12));
}

TEST_CASE("small data decays at the first eigenvalue") {
  const Rational p(2);
  const Rational mu = fujita_critical_mu(Rational(5), p);
  auto result = fujita_1d_solve(Rational(5), 48, {0.01}, mu, p, 5.0);
  REQUIRE(result.outcome.status == SolveStatus::converged_global_on_horizon);
  CHECK(result.serrin.verdict == SerrinVerdict::bounded);

  const double rate = fit_log_slope(result.outcome.trajectory, 2.5);
  CHECK(std::abs(rate + 1.0) <= 0.1);

  CHECK(result.even_mode_leakage <= 1e-10);
}

TEST_CASE("large data escapes in finite time with a consistent scalar bound") {
  const Rational p(2);
  const Rational mu = fujita_critical_mu(Rational(5), p);
  auto result = fujita_1d_solve(Rational(5), 48, {10.0}, mu, p, 1.0);
  REQUIRE(result.outcome.status == SolveStatus::continued_to_blow_up);
  REQUIRE(result.outcome.t_plus.has_value());
  CHECK(result.serrin.verdict == SerrinVerdict::diverging);
  CHECK(result.even_mode_leakage <= 1e-10);

  // first-eigenfunction average m(t) dominates the scalar comparison
  // problem m' = -m + m^kappa started from the same value
  const double m0 = result.pairing.front();
  CHECK(m0 == doctest::Approx(10.0 * std::numbers::pi / 4.0));
  const auto oracle = integrate_scalar(m0, 5.0, 1.0);
  REQUIRE(oracle.blew_up);

  // the simulated escape happens no later than the scalar bound's
  CHECK(result.outcome.t_plus->lo <= oracle.t_end * 1.05 + 1e-6);

  // pointwise domination on the common range
  std::size_t oi = 0;
  for (std::size_t i = 0; i < result.outcome.trajectory.times.size(); ++i) {
    const double t = result.outcome.trajectory.times[i];
    if (t > oracle.t_end) break;
    while (oi + 1 < oracle.times.size() && oracle.times[oi + 1] <= t) ++oi;
    if (oi + 1 >= oracle.times.size()) break;
    const double span = oracle.times[oi + 1] - oracle.times[oi];
    const double w = span > 0.0 ? (t - oracle.times[oi]) / span : 0.0;
    const double m_oracle = (1.0 - w) * oracle.values[oi] + w * oracle.values[oi + 1];
    if (!std::isfinite(m_oracle) || m_oracle > 1e10) break;
    CHECK(result.pairing[i] >= m_oracle * 0.98);
  }
}

TEST_CASE("non-integer exponents evaluate pointwise") {
  // kappa = 7/2: source |u|^{5/2} u, sign-safe through the modulus
  auto result = fujita_1d_solve(Rational(7, 2), 32, {0.05, -0.02}, Rational(1, 2),
                                Rational(2), 2.0);
  REQUIRE(result.outcome.status == SolveStatus::converged_global_on_horizon);
  for (const auto& state : result.outcome.trajectory.states)
    for (double c : state) CHECK(std::isfinite(c));
}

TEST_CASE("mirror-symmetric data keeps even modes silent") {
  // modes 1 and 3 are symmetric about the midpoint; mode 2 must stay zero
  auto result =
      fujita_1d_solve(Rational(5), 32, {0.3, 0.0, 0.1}, Rational(1, 2), Rational(2), 2.0);
  REQUIRE(result.outcome.status == SolveStatus::converged_global_on_horizon);
  CHECK(result.even_mode_leakage <= 1e-10);
}
