#include "critlab/model_io.hpp"

#include "critlab/errors.hpp"
#include "critlab/norms.hpp"
#include "critlab/version.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace critlab::io {

using nlohmann::json;

namespace {

void reject_unknown_fields(const json& obj, std::initializer_list<const char*> allowed,
                           const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* name : allowed)
      if (it.key() == name) { known = true; break; }
    if (!known)
      throw ConfigError("config: unknown field '" + it.key() + "' in " + where);
  }
}

Rational rational_field(const json& obj, const char* name) {
  const auto& v = obj.at(name);
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_float()) {
    // exact base-10 expansion of the printed value, never bit-level rounding
    std::ostringstream os;
    os << std::setprecision(17) << v.get<double>();
    return Rational::parse(os.str());
  }
  throw ConfigError(std::string("config: field '") + name + "' must be a rational");
}

DiagonalOperator parse_operator(const json& obj) {
  reject_unknown_fields(obj, {"rule", "base", "gamma", "values", "N"}, "operator");
  const std::string rule = obj.at("rule").get<std::string>();
  if (rule == "dyadic") {
    const int n = obj.at("N").get<int>();
    const double base = obj.contains("base") ? obj.at("base").get<double>() : 2.0;
    return DiagonalOperator::dyadic(n, base);
  }
  if (rule == "power") {
    const int n = obj.at("N").get<int>();
    return DiagonalOperator::power(n, obj.at("gamma").get<double>());
  }
  if (rule == "list") {
    auto values = obj.at("values").get<std::vector<double>>();
    if (obj.contains("N") && obj.at("N").get<int>() != static_cast<int>(values.size()))
      throw ConfigError("config: operator N disagrees with the value list");
    return DiagonalOperator::explicit_list(std::move(values));
  }
  throw ConfigError("config: operator rule must be dyadic, power, or list");
}

NonlinearitySpec parse_nonlinearity(const json& obj) {
  reject_unknown_fields(obj, {"kind", "beta"}, "nonlinearity");
  NonlinearitySpec spec;
  const std::string kind = obj.at("kind").get<std::string>();
  if (kind == "quadratic_weighted") spec.kind = NonlinearityKind::quadratic_weighted;
  else if (kind == "cubic_damped") spec.kind = NonlinearityKind::cubic_damped;
  else if (kind == "modulus_quadratic") spec.kind = NonlinearityKind::modulus_quadratic;
  else if (kind == "zero") spec.kind = NonlinearityKind::zero;
  else throw ConfigError("config: unknown nonlinearity kind '" + kind + "'");
  if (obj.contains("beta")) spec.beta = rational_field(obj, "beta");
  spec.validate();
  return spec;
}

InitialData parse_initial(const json& obj) {
  reject_unknown_fields(obj, {"kind", "w0", "values", "coefficients"}, "initial");
  InitialData data;
  const std::string kind = obj.at("kind").get<std::string>();
  if (kind == "threshold_profile") {
    data.kind = InitialData::Kind::threshold_profile;
    data.w0 = obj.at("w0").get<double>();
  } else if (kind == "explicit") {
    data.kind = InitialData::Kind::explicit_values;
    data.values = obj.at("values").get<std::vector<double>>();
  } else {
    throw ConfigError("config: initial kind must be threshold_profile or explicit");
  }
  return data;
}

}  // namespace

SimulationConfig parse_simulation_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config: document must be an object");
  if (!doc.contains("schema") || !doc.at("schema").is_number_integer() ||
      doc.at("schema").get<int>() != 1)
    throw ConfigError("config: requires schema: 1");

  const std::string kind =
      doc.contains("kind") ? doc.at("kind").get<std::string>() : std::string("diagonal");

  SimulationConfig config;
  if (kind == "diagonal") {
    reject_unknown_fields(doc, {"schema", "kind", "operator", "nonlinearity", "initial"},
                          "document");
    DiagonalModel model;
    model.op = parse_operator(doc.at("operator"));
    model.nonlinearity = parse_nonlinearity(doc.at("nonlinearity"));
    model.initial = parse_initial(doc.at("initial"));
    if (model.initial.kind == InitialData::Kind::explicit_values &&
        model.initial.values.size() != model.op.eigenvalues.size())
      throw ConfigError("config: initial values do not match the truncation");
    config.model = std::move(model);
  } else if (kind == "fujita_1d") {
    reject_unknown_fields(doc, {"schema", "kind", "kappa", "modes", "initial"}, "document");
    FujitaSetup setup;
    setup.kappa = rational_field(doc, "kappa");
    setup.modes = doc.at("modes").get<int>();
    const auto& initial = doc.at("initial");
    reject_unknown_fields(initial, {"kind", "coefficients"}, "initial");
    if (initial.at("kind").get<std::string>() != "sine_modes")
      throw ConfigError("config: fujita initial kind must be sine_modes");
    setup.initial_modes = initial.at("coefficients").get<std::vector<double>>();
    if (static_cast<int>(setup.initial_modes.size()) > setup.modes)
      throw ConfigError("config: more coefficients than modes");
    config.model = std::move(setup);
  } else {
    throw ConfigError("config: kind must be diagonal or fujita_1d");
  }
  return config;
}

SimulationConfig load_simulation_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  return parse_simulation_config(doc);
}

json simulation_config_to_json(const SimulationConfig& config) {
  json doc;
  doc["schema"] = 1;
  if (const auto* model = std::get_if<DiagonalModel>(&config.model)) {
    doc["kind"] = "diagonal";
    json op;
    switch (model->op.rule) {
      case EigenvalueRule::dyadic:
        op["rule"] = "dyadic";
        op["base"] = model->op.base;
        op["N"] = model->op.truncation();
        break;
      case EigenvalueRule::power:
        op["rule"] = "power";
        op["gamma"] = model->op.gamma;
        op["N"] = model->op.truncation();
        break;
      case EigenvalueRule::explicit_list:
        op["rule"] = "list";
        op["values"] = model->op.eigenvalues;
        break;
    }
    doc["operator"] = op;
    doc["nonlinearity"] = {{"kind", to_string(model->nonlinearity.kind)},
                           {"beta", model->nonlinearity.beta.str()}};
    if (model->initial.kind == InitialData::Kind::threshold_profile)
      doc["initial"] = {{"kind", "threshold_profile"}, {"w0", model->initial.w0}};
    else
      doc["initial"] = {{"kind", "explicit"}, {"values", model->initial.values}};
  } else {
    const auto& setup = std::get<FujitaSetup>(config.model);
    doc["kind"] = "fujita_1d";
    doc["kappa"] = setup.kappa.str();
    doc["modes"] = setup.modes;
    doc["initial"] = {{"kind", "sine_modes"}, {"coefficients", setup.initial_modes}};
  }
  return doc;
}

json manifest_to_json(const RunManifest& manifest) {
  json doc;
  doc["command"] = manifest.command;
  doc["config"] = manifest.config_path;
  doc["outputs"] = manifest.outputs;
  doc["seed"] = manifest.seed;
  doc["tool_version"] = manifest.tool_version;
  doc["timestamp"] = manifest.timestamp;
  return doc;
}

void write_trajectory_csv(std::ostream& os, const WeightedTrajectory& traj,
                          const DiagonalOperator& op, const SerrinReport& serrin) {
  traj.validate();
  os << "t,l2_norm,a_mu_norm,serrin_accumulator,max_component\n";
  os << std::setprecision(17);
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    double l2 = 0.0, peak = 0.0;
    for (double v : traj.states[i]) {
      l2 += v * v;
      peak = std::max(peak, std::abs(v));
    }
    l2 = std::sqrt(l2);
    const double a_mu = x_beta_norm(traj.states[i], traj.mu, op);
    const double acc = i < serrin.running.size() ? serrin.running[i] : 0.0;
    os << traj.times[i] << ',' << l2 << ',' << a_mu << ',' << acc << ',' << peak << '\n';
  }
}

std::vector<TrajectoryRow> read_trajectory_csv(std::istream& is) {
  std::vector<TrajectoryRow> rows;
  std::string line;
  if (!std::getline(is, line)) throw ConfigError("trajectory csv: empty file");
  if (line.rfind("t,", 0) != 0) throw ConfigError("trajectory csv: missing header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    TrajectoryRow row{};
    std::istringstream ss(line);
    char comma;
    if (!(ss >> row.t >> comma >> row.l2 >> comma >> row.a_mu >> comma >> row.serrin >>
          comma >> row.max_component))
      throw ConfigError("trajectory csv: malformed row '" + line + "'");
    rows.push_back(row);
  }
  if (rows.empty()) throw ConfigError("trajectory csv: no data rows");
  return rows;
}

json outcome_to_json(const SolveOutcome& outcome) {
  json doc;
  doc["status"] = to_string(outcome.status);
  if (outcome.t_plus) {
    doc["t_plus"] = {{"lo", outcome.t_plus->lo},
                     {"hi", outcome.t_plus->hi},
                     {"estimate", outcome.t_plus->mid()}};
  }
  doc["iterations"] = outcome.iterations;
  doc["windows"] = outcome.windows;
  doc["final_window"] = outcome.final_window;
  doc["contraction_ratios"] = outcome.contraction_ratios;
  doc["mu"] = outcome.trajectory.mu.str();
  doc["p"] = outcome.trajectory.p.str();
  doc["nodes"] = outcome.trajectory.times.size();
  if (!outcome.trajectory.times.empty()) doc["t_end"] = outcome.trajectory.times.back();
  return doc;
}

json serrin_to_json(const SerrinReport& report) {
  json doc;
  doc["verdict"] = to_string(report.verdict);
  doc["growth_ratio"] = std::isfinite(report.growth_ratio)
                            ? json(report.growth_ratio)
                            : json("infinite");
  doc["final_value"] = report.running.empty() ? 0.0 : report.running.back();
  return doc;
}

json report_to_json(const catalog::CriticalityReport& report) {
  json doc;
  doc["example"] = catalog::to_string(report.id);
  doc["d"] = report.params.d;
  doc["q"] = report.params.q.str();
  doc["p"] = report.params.p.str();
  if (report.params.kappa) doc["kappa"] = report.params.kappa->str();
  doc["beta"] = report.beta.str();
  doc["mu_c"] = report.mu_c.str();
  doc["critical_space"] = {{"smoothness", report.critical_space.smoothness.str()},
                           {"integrability", report.critical_space.integrability.str()},
                           {"micro", report.critical_space.micro.str()},
                           {"kind", to_string(report.critical_space.kind)},
                           {"homogeneous", report.critical_space.homogeneous},
                           {"bc", to_string(report.critical_space.bc)}};
  doc["constraints"] = json::array();
  for (const auto& c : report.constraints) {
    doc["constraints"].push_back({{"description", c.description},
                                  {"inequality", c.inequality},
                                  {"satisfied", c.satisfied},
                                  {"strict", c.strict},
                                  {"informational", c.informational}});
  }
  if (report.delta) doc["delta"] = report.delta->str();
  doc["notes"] = report.notes;
  doc["all_constraints_ok"] = report.all_constraints_ok();
  return doc;
}

std::string report_csv_header() {
  return "example,d,q,p,kappa,beta,mu_c,smoothness,delta,all_constraints_ok";
}

std::string report_csv_row(const catalog::CriticalityReport& report) {
  std::ostringstream os;
  os << catalog::to_string(report.id) << ',' << report.params.d << ','
     << report.params.q.str() << ',' << report.params.p.str() << ','
     << (report.params.kappa ? report.params.kappa->str() : "") << ','
     << report.beta.str() << ',' << report.mu_c.str() << ','
     << report.critical_space.smoothness.str() << ','
     << (report.delta ? report.delta->str() : "") << ','
     << (report.all_constraints_ok() ? "true" : "false");
  return os.str();
}

}  // namespace critlab::io
