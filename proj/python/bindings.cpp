#include "critlab/catalog.hpp"
#include "critlab/errors.hpp"
#include "critlab/evolution.hpp"
#include "critlab/fujita.hpp"
#include "critlab/index_algebra.hpp"
#include "critlab/model_io.hpp"
#include "critlab/norms.hpp"
#include "critlab/scaling.hpp"
#include "critlab/spectral_model.hpp"
#include "critlab/version.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include <sstream>

namespace py = pybind11;
using namespace critlab;
using nlohmann::json;

namespace {

Rational to_rational(const py::object& obj) {
  if (py::isinstance<Rational>(obj)) return obj.cast<Rational>();
  if (py::isinstance<py::str>(obj)) return Rational::parse(obj.cast<std::string>());
  if (py::isinstance<py::int_>(obj)) return Rational(obj.cast<long long>());
  if (py::isinstance<py::float_>(obj)) {
    std::ostringstream os;
    os.precision(17);
    os << obj.cast<double>();
    return Rational::parse(os.str());
  }
  throw py::type_error("expected a rational: str 'a/b', int, float, or Rational");
}

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<long long>());
    case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

DiagonalOperator make_operator(const std::vector<double>& eigenvalues) {
  return DiagonalOperator::explicit_list(eigenvalues);
}

DiagonalModel make_model(const std::vector<double>& eigenvalues, const std::string& kind,
                         const py::object& beta) {
  DiagonalModel model;
  model.op = make_operator(eigenvalues);
  if (kind == "quadratic_weighted") model.nonlinearity.kind = NonlinearityKind::quadratic_weighted;
  else if (kind == "cubic_damped") model.nonlinearity.kind = NonlinearityKind::cubic_damped;
  else if (kind == "modulus_quadratic") model.nonlinearity.kind = NonlinearityKind::modulus_quadratic;
  else if (kind == "zero") model.nonlinearity.kind = NonlinearityKind::zero;
  else throw py::value_error("unknown nonlinearity kind '" + kind + "'");
  model.nonlinearity.beta = to_rational(beta);
  model.nonlinearity.validate();
  return model;
}

catalog::ParamSet make_params(int d, const py::object& q, const py::object& p,
                              const py::object& kappa) {
  catalog::ParamSet params;
  params.d = d;
  params.q = to_rational(q);
  params.p = to_rational(p);
  if (!kappa.is_none()) params.kappa = to_rational(kappa);
  return params;
}

py::dict outcome_to_dict(const SolveOutcome& outcome, const DiagonalOperator& op) {
  py::dict out;
  out["status"] = to_string(outcome.status);
  out["iterations"] = outcome.iterations;
  out["windows"] = outcome.windows;
  out["contraction_ratios"] = outcome.contraction_ratios;
  if (outcome.t_plus) {
    py::dict bracket;
    bracket["lo"] = outcome.t_plus->lo;
    bracket["hi"] = outcome.t_plus->hi;
    bracket["estimate"] = outcome.t_plus->mid();
    out["t_plus"] = bracket;
  } else {
    out["t_plus"] = py::none();
  }
  out["times"] = outcome.trajectory.times;
  std::vector<double> l2(outcome.trajectory.times.size());
  for (std::size_t i = 0; i < l2.size(); ++i)
    l2[i] = x_beta_norm(outcome.trajectory.states[i], Rational(0), op);
  out["l2"] = l2;
  return out;
}

}  // namespace

PYBIND11_MODULE(_critlab, m) {
  m.doc() = "critical weights, diagonal model dynamics, and scaling checks";
  m.attr("__version__") = kVersion;

  py::register_exception<InvalidWeightError>(m, "InvalidWeightError", PyExc_ValueError);
  py::register_exception<NoCriticalTermError>(m, "NoCriticalTermError", PyExc_ValueError);
  py::register_exception<ExcludedCaseError>(m, "ExcludedCaseError", PyExc_ValueError);
  py::register_exception<BlowUpError>(m, "BlowUpError", PyExc_ArithmeticError);

  py::class_<Rational>(m, "Rational")
      .def(py::init([](const py::object& obj) { return to_rational(obj); }))
      .def("__str__", &Rational::str)
      .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
      .def("__float__", &Rational::to_double)
      .def("__eq__", [](const Rational& a, const py::object& b) { return a == to_rational(b); })
      .def("__lt__", [](const Rational& a, const py::object& b) { return a < to_rational(b); })
      .def("__le__", [](const Rational& a, const py::object& b) { return a <= to_rational(b); })
      .def("__add__", [](const Rational& a, const py::object& b) { return a + to_rational(b); })
      .def("__sub__", [](const Rational& a, const py::object& b) { return a - to_rational(b); })
      .def("__mul__", [](const Rational& a, const py::object& b) { return a * to_rational(b); })
      .def("__truediv__", [](const Rational& a, const py::object& b) { return a / to_rational(b); })
      .def("__neg__", [](const Rational& a) { return -a; });

  // ---- index algebra ----
  m.def("check_weight_admissible",
        [](const py::object& mu, const py::object& p) {
          return check_weight_admissible(to_rational(mu), to_rational(p));
        },
        py::arg("mu"), py::arg("p"));

  m.def("sobolev_index",
        [](const py::object& smoothness, const py::object& integrability, int dim) {
          SpaceIndex idx;
          idx.smoothness = to_rational(smoothness);
          idx.integrability = to_rational(integrability);
          return sobolev_index(idx, dim);
        },
        py::arg("smoothness"), py::arg("integrability"), py::arg("dim"));

  m.def("critical_weight",
        [](const py::object& beta, const std::vector<std::pair<py::object, py::object>>& terms,
           const py::object& p) {
          CriticalityProblem problem;
          problem.beta = to_rational(beta);
          problem.p = to_rational(p);
          for (const auto& [rho, beta_j] : terms)
            problem.terms.push_back({to_rational(rho), to_rational(beta_j)});
          problem.validate();
          const auto result = critical_weight(problem);
          py::dict out;
          out["mu_c"] = result.mu_c;
          out["admissible"] = result.admissible;
          out["weight_gap"] = result.mu_c - Rational(1) / problem.p;
          return out;
        },
        py::arg("beta"), py::arg("terms"), py::arg("p"));

  m.def("critical_weight_bilinear",
        [](const py::object& beta, const py::object& p) {
          const auto result = critical_weight_bilinear(to_rational(beta), to_rational(p));
          py::dict out;
          out["mu_c"] = result.mu_c;
          out["regime"] = to_string(result.regime);
          return out;
        },
        py::arg("beta"), py::arg("p"));

  m.def("multilinear_weight",
        [](const std::vector<py::object>& betas, const py::object& p) {
          std::vector<Rational> bs;
          for (const auto& b : betas) bs.push_back(to_rational(b));
          const auto result = multilinear_weight(bs, to_rational(p));
          py::dict out;
          out["mu_c"] = result.mu_c;
          out["regime"] = to_string(result.regime);
          out["pivot"] = result.pivot;
          out["tie_warning"] = result.tie_warning;
          py::list classes;
          for (const auto& c : result.classes) classes.append(to_string(c.value));
          out["classes"] = classes;
          return out;
        },
        py::arg("betas"), py::arg("p"));

  m.def("reiterate",
        [](const py::object& alpha, const py::object& beta, const py::object& theta) {
          return reiterate(to_rational(alpha), to_rational(beta), to_rational(theta));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("theta"));

  m.def("real_interp_shift",
        [](const py::object& s, const py::object& tau, const py::object& p) {
          const auto result = real_interp_shift(to_rational(s), to_rational(tau), to_rational(p));
          py::dict out;
          out["side"] = result.side == ScaleSide::primal ? "primal" : "dual";
          out["index"] = result.index;
          out["micro"] = result.micro;
          return out;
        },
        py::arg("s"), py::arg("tau"), py::arg("p"));

  m.def("scale_shift_window",
        [](const py::object& beta) {
          const auto w = scale_shift_window(to_rational(beta));
          return py::make_tuple(w.lo, w.hi);
        },
        py::arg("beta"));

  // ---- catalog ----
  m.def("catalog_list", []() {
    py::list out;
    for (const auto& info : catalog::list_examples()) {
      py::dict d;
      d["name"] = info.name;
      d["summary"] = info.summary;
      d["reference"] = info.reference;
      d["requires_kappa"] = info.requires_kappa;
      d["fixed_d"] = info.fixed_d ? py::object(py::int_(*info.fixed_d)) : py::none();
      d["has_scaling"] = info.has_scaling;
      out.append(d);
    }
    return out;
  });

  m.def("catalog_evaluate",
        [](const std::string& name, int d, const py::object& q, const py::object& p,
           const py::object& kappa) {
          const auto id = catalog::example_from_string(name);
          if (!id) throw py::value_error("unknown example '" + name + "'");
          const auto report = catalog::evaluate(*id, make_params(d, q, p, kappa));
          return json_to_py(io::report_to_json(report));
        },
        py::arg("name"), py::arg("d"), py::arg("q"), py::arg("p"),
        py::arg("kappa") = py::none());

  m.def("scaling_delta",
        [](const std::string& name, int d, const py::object& q, const py::object& p,
           const py::object& kappa) {
          const auto id = catalog::example_from_string(name);
          if (!id) throw py::value_error("unknown example '" + name + "'");
          const auto check = catalog::scaling_delta(*id, make_params(d, q, p, kappa));
          py::dict out;
          out["delta"] = check.delta;
          out["consistent"] = check.consistent;
          out["note"] = check.note;
          return out;
        },
        py::arg("name"), py::arg("d"), py::arg("q"), py::arg("p"),
        py::arg("kappa") = py::none());

  // ---- spectral model ----
  m.def("closed_form_state",
        [](const std::vector<double>& u0, const std::vector<double>& eigenvalues,
           const py::object& beta, double t) {
          return closed_form_state(u0, make_operator(eigenvalues), to_rational(beta), t);
        },
        py::arg("u0"), py::arg("eigenvalues"), py::arg("beta"), py::arg("t"));

  m.def("blow_up_time",
        [](const std::vector<double>& u0, const std::vector<double>& eigenvalues,
           const py::object& beta) -> py::object {
          const auto bt = blow_up_time(u0, make_operator(eigenvalues), to_rational(beta));
          if (!bt) return py::none();
          py::dict out;
          out["value"] = bt->value;
          out["lo"] = bt->lo;
          out["hi"] = bt->hi;
          return out;
        },
        py::arg("u0"), py::arg("eigenvalues"), py::arg("beta"));

  m.def("necessary_condition",
        [](const std::vector<double>& u0, const std::vector<double>& eigenvalues,
           const py::object& beta) {
          const auto nec =
              necessary_condition_check(u0, make_operator(eigenvalues), to_rational(beta));
          py::dict out;
          out["value"] = nec.value;
          out["holds"] = nec.holds;
          return out;
        },
        py::arg("u0"), py::arg("eigenvalues"), py::arg("beta"));

  m.def("threshold_profile",
        [](const std::vector<double>& eigenvalues, const py::object& beta, double w0) {
          return threshold_profile(make_operator(eigenvalues), to_rational(beta), w0);
        },
        py::arg("eigenvalues"), py::arg("beta"), py::arg("w0"));

  m.def("power_norm",
        [](const std::vector<double>& u0, const py::object& s,
           const std::vector<double>& eigenvalues) {
          return power_norm(u0, to_rational(s), make_operator(eigenvalues));
        },
        py::arg("u0"), py::arg("s"), py::arg("eigenvalues"));

  m.def("dyadic_profile_series",
        [](const py::object& beta, const py::object& s, double c) {
          const auto v = dyadic_profile_series(to_rational(beta), to_rational(s), c);
          py::dict out;
          out["ratio"] = v.ratio;
          out["converges"] = v.converges;
          out["norm"] = v.norm ? py::object(py::float_(*v.norm)) : py::none();
          return out;
        },
        py::arg("beta"), py::arg("s"), py::arg("c"));

  m.def("semigroup_domination",
        [](const std::vector<double>& u0, const std::vector<double>& eigenvalues,
           const py::object& beta, const std::vector<double>& grid) {
          const auto check = semigroup_domination_check(u0, make_operator(eigenvalues),
                                                        to_rational(beta), grid);
          py::dict out;
          out["holds"] = check.holds;
          out["max_violation"] = check.max_violation;
          return out;
        },
        py::arg("u0"), py::arg("eigenvalues"), py::arg("beta"), py::arg("grid"));

  // ---- norms ----
  m.def("x_beta_norm",
        [](const std::vector<double>& x, const py::object& beta,
           const std::vector<double>& eigenvalues) {
          return x_beta_norm(x, to_rational(beta), make_operator(eigenvalues));
        },
        py::arg("x"), py::arg("beta"), py::arg("eigenvalues"));

  m.def("da_norm",
        [](const std::vector<double>& x, const py::object& alpha, const py::object& p,
           const std::vector<double>& eigenvalues) {
          return da_norm(x, to_rational(alpha), to_rational(p), make_operator(eigenvalues));
        },
        py::arg("x"), py::arg("alpha"), py::arg("p"), py::arg("eigenvalues"));

  // ---- evolution ----
  m.def("picard_solve",
        [](const std::vector<double>& eigenvalues, const std::string& kind,
           const py::object& beta, const std::vector<double>& u0, const py::object& mu,
           const py::object& p, double horizon) {
          const auto model = make_model(eigenvalues, kind, beta);
          const auto outcome =
              picard_solve(model, u0, to_rational(mu), to_rational(p), horizon);
          auto out = outcome_to_dict(outcome, model.op);
          const auto serrin =
              serrin_monitor(outcome, to_rational(mu), to_rational(p), model.op);
          out["serrin_verdict"] = to_string(serrin.verdict);
          return out;
        },
        py::arg("eigenvalues"), py::arg("kind"), py::arg("beta"), py::arg("u0"),
        py::arg("mu"), py::arg("p"), py::arg("horizon"));

  m.def("continue_maximal",
        [](const std::vector<double>& eigenvalues, const std::string& kind,
           const py::object& beta, const std::vector<double>& u0, const py::object& mu,
           const py::object& p, double horizon) {
          const auto model = make_model(eigenvalues, kind, beta);
          SolveConfig cfg;
          cfg.horizon = horizon;
          const auto outcome =
              continue_maximal(model, u0, to_rational(mu), to_rational(p), cfg);
          auto out = outcome_to_dict(outcome, model.op);
          const auto serrin =
              serrin_monitor(outcome, to_rational(mu), to_rational(p), model.op);
          out["serrin_verdict"] = to_string(serrin.verdict);
          return out;
        },
        py::arg("eigenvalues"), py::arg("kind"), py::arg("beta"), py::arg("u0"),
        py::arg("mu"), py::arg("p"), py::arg("horizon"));

  m.def("small_data_decay",
        [](const std::vector<double>& eigenvalues, const std::string& kind,
           const py::object& beta, const std::vector<double>& u0) {
          const auto fit = small_data_decay(make_model(eigenvalues, kind, beta), u0);
          py::dict out;
          out["rate"] = fit.rate;
          out["passes"] = fit.passes;
          out["note"] = fit.note;
          return out;
        },
        py::arg("eigenvalues"), py::arg("kind"), py::arg("beta"), py::arg("u0"));

  m.def("fujita_critical_mu",
        [](const py::object& kappa, const py::object& p) {
          return fujita_critical_mu(to_rational(kappa), to_rational(p));
        },
        py::arg("kappa"), py::arg("p"));

  m.def("fujita_solve",
        [](const py::object& kappa, int modes, const std::vector<double>& u0_modes,
           const py::object& p, double horizon, const py::object& mu) {
          const Rational pr = to_rational(p);
          const Rational mur =
              mu.is_none() ? fujita_critical_mu(to_rational(kappa), pr) : to_rational(mu);
          const auto result =
              fujita_1d_solve(to_rational(kappa), modes, u0_modes, mur, pr, horizon);
          auto out = outcome_to_dict(result.outcome, result.op);
          out["serrin_verdict"] = to_string(result.serrin.verdict);
          out["even_mode_leakage"] = result.even_mode_leakage;
          out["pairing"] = result.pairing;
          return out;
        },
        py::arg("kappa"), py::arg("modes"), py::arg("u0_modes"), py::arg("p"),
        py::arg("horizon"), py::arg("mu") = py::none());

  // ---- scaling ----
  m.def("scaling_exponent",
        [](int d, double s, const std::vector<double>& lambdas) {
          const auto profile = scaling::gaussian_profile(d);
          const auto check = scaling::scaling_ratio_check(profile, s, lambdas);
          py::dict out;
          out["fitted"] = check.fitted;
          out["deviation"] = check.deviation;
          out["degenerate"] = check.degenerate;
          out["expected"] = s - (0.5 * d - 1.0);
          return out;
        },
        py::arg("d"), py::arg("s"), py::arg("lambdas"));

  m.def("delta_sweep", []() {
    py::list out;
    for (const auto& row : scaling::delta_consistency_sweep(scaling::default_sweep_entries())) {
      py::dict d;
      d["entry"] = row.name;
      d["delta"] = row.delta;
      d["weight_gap"] = row.weight_gap;
      d["equal"] = row.equal;
      out.append(d);
    }
    return out;
  });
}
