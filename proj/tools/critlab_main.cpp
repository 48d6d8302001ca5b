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

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace critlab;

namespace {

// exit codes: 0 ok/global, 1 usage or malformed input, 2 inadmissible
// weight, 3 blow-up outcome or regression mismatch, 4 fixed-point divergence
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInadmissible = 2;
constexpr int kExitBlowUp = 3;
constexpr int kExitDiverged = 4;

struct GlobalOptions {
  bool json_output = false;
  std::string out_dir;
  unsigned long seed = 0;
  std::string timestamp;  // fixed for reproducible manifests
};

std::string now_iso8601() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
  return buf;
}

io::RunManifest make_manifest(const GlobalOptions& opts, const std::string& command,
                              const std::string& config_path,
                              std::vector<std::string> outputs) {
  io::RunManifest manifest;
  manifest.command = command;
  manifest.config_path = config_path;
  manifest.outputs = std::move(outputs);
  manifest.seed = opts.seed;
  manifest.tool_version = kVersion;
  manifest.timestamp = opts.timestamp.empty() ? now_iso8601() : opts.timestamp;
  return manifest;
}

fs::path resolve_out_dir(const GlobalOptions& opts) {
  if (!opts.out_dir.empty()) return fs::path(opts.out_dir);
  if (const char* env = std::getenv("CRITLAB_OUT")) return fs::path(env);
  return fs::current_path();
}

Rational parse_rational_arg(const std::string& text, const std::string& what) {
  auto r = Rational::try_parse(text);
  if (!r) throw CLI::ValidationError(what, "cannot parse rational '" + text + "'");
  return *r;
}

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& what) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational_arg(item, what));
  if (out.empty()) throw CLI::ValidationError(what, "empty list");
  return out;
}

// ---------------------------------------------------------------- weight --

int run_weight(const GlobalOptions& opts, const std::string& beta_s,
               const std::string& p_s, const std::vector<std::string>& term_specs,
               const std::string& multi_s, const std::string& mu_s) {
  const Rational p = parse_rational_arg(p_s, "--p");
  json doc;
  doc["command"] = "weight";
  int exit_code = kExitOk;

  if (!multi_s.empty()) {
    const auto betas = parse_rational_list(multi_s, "--multi");
    const auto result = multilinear_weight(betas, p);
    doc["mode"] = "multilinear";
    doc["mu_c"] = result.mu_c.str();
    doc["weight_gap"] = (result.mu_c - Rational(1) / p).str();
    doc["regime"] = to_string(result.regime);
    if (result.regime == Regime::critical) {
      doc["pivot"] = result.pivot;
      doc["tie_warning"] = result.tie_warning;
      json classes = json::array();
      for (std::size_t j = 0; j < result.classes.size(); ++j)
        classes.push_back({{"index", j + 1},
                           {"class", to_string(result.classes[j].value)},
                           {"slack", result.classes[j].slack.str()}});
      doc["classes"] = classes;
      if (!check_weight_admissible(result.mu_c, p)) exit_code = kExitInadmissible;
    }
    doc["admissible"] = exit_code == kExitOk;

    if (!opts.json_output) {
      std::cout << "mu_c = " << result.mu_c.str() << "  (" << to_string(result.regime)
                << ")\n";
      if (result.regime == Regime::subcritical)
        std::cout << "any mu > 1/p = " << (Rational(1) / p).str() << " is admissible\n";
      else {
        std::cout << "pivot l = " << result.pivot;
        if (result.tie_warning) std::cout << "  [tie: largest maximizer returned]";
        std::cout << "\n";
        for (std::size_t j = 0; j < result.classes.size(); ++j)
          std::cout << "  term " << j + 1 << ": " << to_string(result.classes[j].value)
                    << " (slack " << result.classes[j].slack.str() << ")\n";
        if (exit_code != kExitOk) std::cout << "weight is inadmissible at this p\n";
      }
    } else {
      std::cout << doc.dump(2) << "\n";
    }
    return exit_code;
  }

  if (beta_s.empty() || term_specs.empty())
    throw CLI::ValidationError("weight", "need --beta and at least one --term, or --multi");

  const Rational beta = parse_rational_arg(beta_s, "--beta");
  CriticalityProblem problem;
  problem.beta = beta;
  problem.p = p;
  for (const auto& spec : term_specs) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
      throw CLI::ValidationError("--term", "expected rho:beta_j, got '" + spec + "'");
    CriticalityTerm term;
    term.rho = parse_rational_arg(spec.substr(0, colon), "--term rho");
    term.beta_j = parse_rational_arg(spec.substr(colon + 1), "--term beta_j");
    problem.terms.push_back(term);
  }
  problem.validate();

  const auto result = critical_weight(problem);
  const Rational inv_p = Rational(1) / p;
  // a weight gap of exactly zero means every admissible mu works
  const bool subcritical = (result.mu_c == inv_p);
  const bool admissible = result.admissible || subcritical;

  doc["mode"] = "terms";
  doc["mu_c"] = result.mu_c.str();
  doc["weight_gap"] = (result.mu_c - inv_p).str();
  doc["regime"] = subcritical ? "subcritical-regime" : "critical-regime";
  doc["admissible"] = admissible;

  json classes = json::array();
  if (!subcritical && result.admissible) {
    auto at_weight = problem;
    at_weight.mu = mu_s.empty() ? result.mu_c : parse_rational_arg(mu_s, "--mu");
    for (std::size_t j = 0; j < problem.terms.size(); ++j) {
      const auto c = classify_term(at_weight, problem.terms[j]);
      classes.push_back({{"index", j + 1},
                         {"class", to_string(c.value)},
                         {"slack", c.slack.str()}});
    }
  }
  doc["classes"] = classes;

  if (opts.json_output) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "mu_c = " << result.mu_c.str() << "  (" << doc["regime"].get<std::string>()
              << ")\n";
    if (subcritical)
      std::cout << "any mu > 1/p = " << inv_p.str() << " is admissible\n";
    else if (!result.admissible)
      std::cout << "weight is inadmissible (outside (1/p, 1])\n";
    for (const auto& c : classes)
      std::cout << "  term " << c["index"] << ": " << c["class"].get<std::string>()
                << " (slack " << c["slack"].get<std::string>() << ")\n";
  }
  return admissible ? kExitOk : kExitInadmissible;
}

// --------------------------------------------------------------- catalog --

void print_report_text(const catalog::CriticalityReport& report) {
  std::cout << catalog::to_string(report.id) << ": beta = " << report.beta.str()
            << ", mu_c = " << report.mu_c.str()
            << ", critical smoothness = " << report.critical_space.smoothness.str();
  if (report.delta) std::cout << ", delta = " << report.delta->str();
  std::cout << "\n";
  for (const auto& c : report.constraints)
    std::cout << "  [" << (c.satisfied ? "ok" : "NO") << "] " << c.description << ": "
              << c.inequality << (c.informational ? " (informational)" : "") << "\n";
  for (const auto& note : report.notes) std::cout << "  note: " << note << "\n";
}

int run_catalog(const GlobalOptions& opts, const std::string& example, bool all,
                bool check_paper, int d, const std::string& q_s, const std::string& p_s,
                const std::string& kappa_s) {
  if (check_paper || all) {
    const auto suite = catalog::regression_suite();
    json rows = json::array();
    int mismatches = 0;
    if (!opts.json_output) std::cout << io::report_csv_header() << "\n";
    for (const auto& [id, params] : suite) {
      const auto report = catalog::evaluate(id, params);
      if (check_paper) {
        const bool ok = report.mu_c == catalog::formula_mu_c(id, params) &&
                        report.critical_space.smoothness ==
                            catalog::formula_smoothness(id, params) &&
                        report.all_constraints_ok();
        if (!ok) {
          ++mismatches;
          std::cerr << "mismatch: " << catalog::to_string(id) << "\n";
        }
      }
      if (opts.json_output)
        rows.push_back(io::report_to_json(report));
      else
        std::cout << io::report_csv_row(report) << "\n";
    }
    if (opts.json_output) std::cout << rows.dump(2) << "\n";
    if (check_paper) {
      std::cerr << (mismatches == 0 ? "regression set: all rows match\n"
                                    : "regression set: mismatches found\n");
      return mismatches == 0 ? kExitOk : kExitBlowUp;
    }
    return kExitOk;
  }

  const auto id = catalog::example_from_string(example);
  if (!id) throw CLI::ValidationError("catalog", "unknown example '" + example + "'");
  catalog::ParamSet params;
  params.d = d;
  params.q = parse_rational_arg(q_s, "-q");
  params.p = parse_rational_arg(p_s, "-p");
  if (!kappa_s.empty()) params.kappa = parse_rational_arg(kappa_s, "--kappa");

  const auto report = catalog::evaluate(*id, params);
  if (opts.json_output)
    std::cout << io::report_to_json(report).dump(2) << "\n";
  else
    print_report_text(report);
  return kExitOk;
}

// -------------------------------------------------------------- simulate --

int run_simulate(const GlobalOptions& opts, const std::string& config_path,
                 double horizon, const std::string& mu_s, const std::string& p_s,
                 bool maximal) {
  const auto config = io::load_simulation_config(config_path);
  const Rational p = parse_rational_arg(p_s, "--p");

  const fs::path dir = resolve_out_dir(opts);
  fs::create_directories(dir);
  const fs::path traj_path = dir / "trajectory.csv";
  const fs::path outcome_path = dir / "outcome.json";

  json doc;
  SolveStatus status;

  if (config.is_fujita()) {
    const auto& setup = std::get<io::FujitaSetup>(config.model);
    const Rational mu = mu_s.empty() ? fujita_critical_mu(setup.kappa, p)
                                     : parse_rational_arg(mu_s, "--mu");
    // mu enters only as the fractional power in the monitor integrand, so
    // the full [0,1] range is usable (the critical value can sit at 1/p)
    if (mu < Rational(0) || mu > Rational(1)) {
      std::cerr << "monitor power mu = " << mu.str() << " outside [0,1]\n";
      return kExitInadmissible;
    }
    const auto result =
        fujita_1d_solve(setup.kappa, setup.modes, setup.initial_modes, mu, p, horizon);
    status = result.outcome.status;

    std::ofstream traj_file(traj_path);
    io::write_trajectory_csv(traj_file, result.outcome.trajectory, result.op, result.serrin);

    doc = io::outcome_to_json(result.outcome);
    doc["serrin"] = io::serrin_to_json(result.serrin);
    doc["even_mode_leakage"] = result.even_mode_leakage;
    if (status == SolveStatus::converged_global_on_horizon) {
      const double rate = fit_log_slope(result.outcome.trajectory, 0.5 * horizon);
      doc["decay_rate"] = std::isfinite(rate) ? json(rate) : json(nullptr);
    }
  } else {
    const auto& model = std::get<DiagonalModel>(config.model);
    const Rational mu = mu_s.empty() ? Rational(1) : parse_rational_arg(mu_s, "--mu");
    if (!check_weight_admissible(mu, p)) {
      std::cerr << "inadmissible weight mu = " << mu.str() << "\n";
      return kExitInadmissible;
    }
    if (auto warning = model.nonlinearity.check_with_p(p))
      std::cerr << "warning: " << *warning << "\n";

    const StateVector u0 = model.initial_state();
    SolveOutcome outcome;
    if (maximal) {
      SolveConfig cfg;
      cfg.horizon = horizon;
      outcome = continue_maximal(model, u0, mu, p, cfg);
    } else {
      outcome = picard_solve(model, u0, mu, p, horizon);
    }
    status = outcome.status;
    const auto serrin = serrin_monitor(outcome, mu, p, model.op);

    std::ofstream traj_file(traj_path);
    io::write_trajectory_csv(traj_file, outcome.trajectory, model.op, serrin);

    doc = io::outcome_to_json(outcome);
    doc["serrin"] = io::serrin_to_json(serrin);
  }

  doc["manifest"] = io::manifest_to_json(make_manifest(
      opts, "simulate", config_path, {traj_path.string(), outcome_path.string()}));
  std::ofstream outcome_file(outcome_path);
  outcome_file << doc.dump(2) << "\n";

  if (opts.json_output)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << "status: " << to_string(status) << "\nwrote " << traj_path.string()
              << " and " << outcome_path.string() << "\n";

  switch (status) {
    case SolveStatus::converged_global_on_horizon: return kExitOk;
    case SolveStatus::continued_to_blow_up: return kExitBlowUp;
    case SolveStatus::picard_diverged: return kExitDiverged;
  }
  return kExitDiverged;
}

// ---------------------------------------------------------------- serrin --

int run_serrin(const GlobalOptions& opts, const std::string& traj_path,
               const std::string& p_s, double t_plus) {
  const Rational p = parse_rational_arg(p_s, "--p");
  std::ifstream in(traj_path);
  if (!in) throw ConfigError("serrin: cannot open '" + traj_path + "'");
  const auto rows = io::read_trajectory_csv(in);

  const double pe = p.to_double();
  std::vector<double> running(rows.size(), 0.0);
  double acc = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double fa = std::pow(rows[i - 1].a_mu, pe);
    const double fb = std::pow(rows[i].a_mu, pe);
    acc += 0.5 * (fa + fb) * (rows[i].t - rows[i - 1].t);
    running[i] = acc;
  }

  const double t_end = t_plus > 0.0 ? t_plus : rows.back().t;
  double ref = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].t <= 0.5 * t_end) ref = running[i];
  const double ratio = ref > 0.0
                           ? acc / ref
                           : (acc > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);
  const bool diverging = ratio > 1e3;

  json doc;
  doc["command"] = "serrin";
  doc["verdict"] = diverging ? "diverging" : "bounded";
  doc["growth_ratio"] = std::isfinite(ratio) ? json(ratio) : json("infinite");
  doc["final_value"] = acc;
  doc["rows"] = rows.size();
  // cross-check against the accumulator column carried in the file
  doc["stored_final_value"] = rows.back().serrin;

  if (opts.json_output)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << "serrin verdict: " << doc["verdict"].get<std::string>()
              << " (accumulated " << acc << ")\n";
  return kExitOk;
}

// --------------------------------------------------------------- scaling --

int run_scaling(const GlobalOptions& opts, bool check_delta, bool all,
                const std::string& profile_name, int d, double s,
                const std::string& lambdas_s) {
  json doc;
  doc["command"] = "scaling";

  if (check_delta) {
    auto entries = scaling::default_sweep_entries();
    if (!all) entries.resize(1);
    const auto rows = scaling::delta_consistency_sweep(entries);
    bool all_equal = true;
    if (!opts.json_output) std::cout << "entry,delta,weight_gap,equal\n";
    json out_rows = json::array();
    for (const auto& row : rows) {
      all_equal = all_equal && row.equal;
      if (opts.json_output)
        out_rows.push_back({{"entry", row.name},
                            {"delta", row.delta.str()},
                            {"weight_gap", row.weight_gap.str()},
                            {"equal", row.equal},
                            {"note", row.note}});
      else
        std::cout << row.name << ',' << row.delta.str() << ',' << row.weight_gap.str()
                  << ',' << (row.equal ? "true" : "false") << "\n";
    }
    if (opts.json_output) {
      doc["rows"] = out_rows;
      doc["all_equal"] = all_equal;
      std::cout << doc.dump(2) << "\n";
    }
    return all_equal ? kExitOk : kExitBlowUp;
  }

  if (profile_name != "gaussian")
    throw CLI::ValidationError("scaling", "only the gaussian profile is built in");
  std::vector<double> lambdas;
  {
    std::stringstream ss(lambdas_s);
    std::string item;
    while (std::getline(ss, item, ',')) lambdas.push_back(std::stod(item));
  }
  if (lambdas.empty()) throw CLI::ValidationError("scaling", "--lambdas is empty");

  const auto profile = scaling::gaussian_profile(d);
  const auto check = scaling::scaling_ratio_check(profile, s, lambdas);
  const double expected = s - (0.5 * d - 1.0);

  if (!opts.json_output) {
    std::cout << "s,lambda,ratio,fitted_exponent,expected_exponent,deviation\n";
    for (const auto& row : check.rows)
      std::cout << s << ',' << row.lambda << ',' << row.ratio << ',' << check.fitted
                << ',' << expected << ',' << check.deviation << "\n";
    if (check.degenerate)
      std::cout << "warning: degenerate fit (need at least one lambda != 1)\n";
  } else {
    doc["s"] = s;
    doc["fitted_exponent"] = check.fitted;
    doc["expected_exponent"] = expected;
    doc["deviation"] = check.deviation;
    doc["degenerate"] = check.degenerate;
    json out_rows = json::array();
    for (const auto& row : check.rows)
      out_rows.push_back(
          {{"lambda", row.lambda}, {"ratio", row.ratio}, {"exponent", row.exponent}});
    doc["rows"] = out_rows;
    std::cout << doc.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"critlab: critical weights, counterexample dynamics, and scaling checks "
               "for semilinear parabolic evolution problems"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.set_version_flag("--version", kVersion);
  app.add_flag("--json", opts.json_output, "emit JSON instead of text");
  app.add_option("--out", opts.out_dir, "output directory (or env CRITLAB_OUT)");
  app.add_option("--seed", opts.seed, "seed recorded in the run manifest");
  app.add_option("--timestamp", opts.timestamp,
                 "fixed manifest timestamp (default: current time)");

  // weight
  auto* weight = app.add_subcommand("weight", "critical weight of a criticality problem");
  std::string beta_s, p_s{"2"}, multi_s, mu_s;
  std::vector<std::string> term_specs;
  weight->add_option("--beta", beta_s, "target smoothness exponent (rational)");
  weight->add_option("--p", p_s, "time integrability p > 1");
  weight->add_option("--term", term_specs, "nonlinearity term rho:beta_j (repeatable)");
  weight->add_option("--multi", multi_s, "multilinear exponents b1,b2,... (nonincreasing)");
  weight->add_option("--mu", mu_s, "classify terms at this weight instead of mu_c");

  // catalog
  auto* cat = app.add_subcommand("catalog", "criticality reports for the example catalog");
  std::string example, cat_q{"2"}, cat_p{"2"}, cat_kappa;
  int cat_d = 3;
  bool cat_all = false, check_paper = false;
  cat->add_option("example", example, "entry name (see list)");
  cat->add_flag("--all", cat_all, "run the shipped regression grid");
  cat->add_flag("--check-paper", check_paper,
                "verify the grid against the built-in closed-form regression formulas");
  cat->add_option("-d,--dim", cat_d, "space dimension");
  cat->add_option("-q", cat_q, "integrability q (rational)");
  cat->add_option("-p", cat_p, "time integrability p (rational)");
  cat->add_option("--kappa", cat_kappa, "nonlinearity exponent (rational)");

  // list
  auto* list = app.add_subcommand("list", "list catalog entries");

  // simulate
  auto* sim = app.add_subcommand("simulate", "run a model from a JSON config");
  std::string config_path, sim_mu, sim_p{"2"};
  double sim_horizon = 1.0;
  bool maximal = false;
  sim->add_option("--config", config_path, "model configuration (JSON)")->required();
  sim->add_option("--horizon", sim_horizon, "time horizon");
  sim->add_option("--mu", sim_mu, "time weight (rational; default 1, or critical for fujita)");
  sim->add_option("--p", sim_p, "time integrability (rational)");
  sim->add_flag("--maximal", maximal, "continue in windows up to the horizon or blow-up");

  // serrin
  auto* ser = app.add_subcommand("serrin", "post-process a trajectory CSV");
  std::string ser_traj, ser_p{"2"};
  double ser_tplus = 0.0;
  ser->add_option("--trajectory", ser_traj, "trajectory CSV path")->required();
  ser->add_option("--p", ser_p, "integrability used in the accumulator");
  ser->add_option("--t-plus", ser_tplus, "escape-time estimate (default: last time)");

  // scaling
  auto* sc = app.add_subcommand("scaling", "dilation power laws and scaling numbers");
  bool check_delta = false, sc_all = false;
  std::string sc_profile{"gaussian"}, sc_lambdas{"0.5,2,4"};
  int sc_d = 3;
  double sc_s = 0.5;
  sc->add_flag("--check-delta", check_delta, "exact scaling-number consistency sweep");
  sc->add_flag("--all", sc_all, "all catalog entries");
  sc->add_option("--profile", sc_profile, "test profile (gaussian)");
  sc->add_option("-d,--dim", sc_d, "dimension");
  sc->add_option("-s", sc_s, "smoothness exponent");
  sc->add_option("--lambdas", sc_lambdas, "dilation parameters, comma separated");

  // global flags may trail the subcommand
  for (auto* sub : {weight, cat, list, sim, ser, sc}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (weight->parsed())
      return run_weight(opts, beta_s, p_s, term_specs, multi_s, mu_s);
    if (cat->parsed())
      return run_catalog(opts, example, cat_all, check_paper, cat_d, cat_q, cat_p, cat_kappa);
    if (list->parsed()) {
      if (opts.json_output) {
        json rows = json::array();
        for (const auto& info : catalog::list_examples()) {
          json row = {{"name", info.name},
                      {"summary", info.summary},
                      {"reference", info.reference},
                      {"requires_kappa", info.requires_kappa},
                      {"has_scaling", info.has_scaling}};
          if (info.fixed_d) row["fixed_d"] = *info.fixed_d;
          rows.push_back(row);
        }
        std::cout << rows.dump(2) << "\n";
      } else {
        for (const auto& info : catalog::list_examples()) {
          std::cout << info.name << ": " << info.summary << " [" << info.reference << "]";
          if (info.requires_kappa) std::cout << " (requires kappa)";
          if (info.fixed_d) std::cout << " (d = " << *info.fixed_d << ")";
          std::cout << "\n";
        }
      }
      return kExitOk;
    }
    if (sim->parsed())
      return run_simulate(opts, config_path, sim_horizon, sim_mu, sim_p, maximal);
    if (ser->parsed()) return run_serrin(opts, ser_traj, ser_p, ser_tplus);
    if (sc->parsed())
      return run_scaling(opts, check_delta, sc_all, sc_profile, sc_d, sc_s, sc_lambdas);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidWeightError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInadmissible;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
