// Copyright 2026 The Shoreline Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SHORELINE_CONFIG_HPP_
#define SHORELINE_CONFIG_HPP_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "shoreline/evaluator.hpp"
#include "shoreline/trajectory.hpp"

namespace shoreline {

inline constexpr int kFleetConfigVersion = 1;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation settings stored alongside a fleet; unset fields fall back to
// the library defaults.
struct EvalSettings {
  std::optional<double> horizon;
  std::optional<int> theta_steps;
  std::optional<int> t_steps;
  std::optional<double> epsilon;
  std::optional<Window> window;
  bool spiral_window = false;  // "window": "spiral"
};

/// Parsed fleet file:
///   { "version": 1,
///     "robots": [ {"type": "ray", "angle": 0.0},
///                 {"type": "log_spiral", "growth": 0.2, "start_radius": 1,
///                  "start_phase": 0, "chirality": "ccw"},
///                 {"type": "antipodal", "of": 0},
///                 {"type": "polyline", "vertices": [[0, 0], [1, 0]]} ],
///     "evaluation": { "horizon": 1, "theta_steps": 720, "t_steps": 4096,
///                     "epsilon": 0.001, "window": [lo, hi] | "spiral" } }
/// "of" is either the index of an earlier robot or an inline descriptor.
struct FleetConfig {
  int version = kFleetConfigVersion;
  Fleet fleet;
  EvalSettings evaluation;
};

FleetConfig parse_fleet_config(const nlohmann::json& doc);
FleetConfig load_fleet_config(const std::filesystem::path& path);

nlohmann::json trajectory_to_json(const TrajectorySpec& spec);
nlohmann::json fleet_to_json(const Fleet& fleet);
TrajectorySpec trajectory_from_json(const nlohmann::json& j, const std::string& where);
Fleet fleet_from_json(const nlohmann::json& robots);

/// Evaluation options for the fleet, with the config's settings applied over
/// the library defaults. "spiral" windows require every robot to be a log
/// spiral (or its antipode) of a common growth and start radius.
EvalOptions resolve_eval_options(const FleetConfig& config);

}  // namespace shoreline

#endif  // SHORELINE_CONFIG_HPP_
