#pragma once

#include "critlab/catalog.hpp"
#include "critlab/evolution.hpp"
#include "critlab/fujita.hpp"
#include "critlab/spectral_model.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

namespace critlab::io {

/// Versioned simulation configuration: either a truncated diagonal model
/// or the 1-D reaction-diffusion run. Unknown fields are rejected.
struct FujitaSetup {
  Rational kappa{5};
  int modes{64};
  std::vector<double> initial_modes;
};

struct SimulationConfig {
  std::variant<DiagonalModel, FujitaSetup> model;

  bool is_fujita() const { return std::holds_alternative<FujitaSetup>(model); }
};

SimulationConfig parse_simulation_config(const nlohmann::json& doc);
SimulationConfig load_simulation_config(const std::string& path);
nlohmann::json simulation_config_to_json(const SimulationConfig& config);

/// Reproducibility envelope attached to structured outputs.
struct RunManifest {
  std::string command;
  std::string config_path;
  std::vector<std::string> outputs;
  unsigned long seed{0};
  std::string tool_version;
  std::string timestamp;
};

nlohmann::json manifest_to_json(const RunManifest& manifest);

/// Trajectory CSV: t, |u|_l2, |A^mu u|, running Serrin accumulator, max
/// component magnitude. One row per grid node.
void write_trajectory_csv(std::ostream& os, const WeightedTrajectory& traj,
                          const DiagonalOperator& op, const SerrinReport& serrin);

struct TrajectoryRow {
  double t;
  double l2;
  double a_mu;
  double serrin;
  double max_component;
};

std::vector<TrajectoryRow> read_trajectory_csv(std::istream& is);

nlohmann::json outcome_to_json(const SolveOutcome& outcome);
nlohmann::json serrin_to_json(const SerrinReport& report);

nlohmann::json report_to_json(const catalog::CriticalityReport& report);
std::string report_csv_header();
std::string report_csv_row(const catalog::CriticalityReport& report);

}  // namespace critlab::io
