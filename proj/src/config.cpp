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

#include "shoreline/config.hpp"

#include <fstream>
#include <sstream>

#include "shoreline/optimizer.hpp"

namespace shoreline {

using nlohmann::json;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double number_field(const json& j, const char* key, const std::string& where,
                    std::optional<double> fallback = std::nullopt) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    throw ConfigError(where + ": missing field '" + key + "'");
  }
  if (!j.at(key).is_number()) throw ConfigError(where + ": field '" + key + "' must be a number");
  return j.at(key).get<double>();
}

TrajectorySpec parse_robot(const json& j, const std::string& where,
                           const std::vector<TrajectorySpec>& earlier) {
  if (!j.is_object()) throw ConfigError(where + ": trajectory must be an object");
  if (!j.contains("type") || !j.at("type").is_string()) {
    throw ConfigError(where + ": missing string field 'type'");
  }
  const std::string type = j.at("type").get<std::string>();
  try {
    if (type == "ray") return TrajectorySpec(Ray{number_field(j, "angle", where)});
    if (type == "log_spiral") {
      LogSpiral s;
      s.growth = number_field(j, "growth", where);
      s.start_radius = number_field(j, "start_radius", where, 1.0);
      s.start_phase = number_field(j, "start_phase", where, 0.0);
      const std::string chir = j.value("chirality", std::string("ccw"));
      if (chir == "ccw") {
        s.chirality = Chirality::kCounterClockwise;
      } else if (chir == "cw") {
        s.chirality = Chirality::kClockwise;
      } else {
        throw ConfigError(where + ": chirality must be 'ccw' or 'cw'");
      }
      return TrajectorySpec(s);
    }
    if (type == "antipodal") {
      if (!j.contains("of")) throw ConfigError(where + ": missing field 'of'");
      const json& of = j.at("of");
      if (of.is_number_integer()) {
        const auto idx = of.get<long long>();
        if (idx < 0 || static_cast<std::size_t>(idx) >= earlier.size()) {
          throw ConfigError(where + ": 'of' must name an earlier robot");
        }
        return TrajectorySpec::antipodal(earlier[static_cast<std::size_t>(idx)]);
      }
      return TrajectorySpec::antipodal(parse_robot(of, where + ".of", earlier));
    }
    if (type == "polyline") {
      if (!j.contains("vertices") || !j.at("vertices").is_array()) {
        throw ConfigError(where + ": missing array field 'vertices'");
      }
      std::vector<Point2> v;
      for (const json& p : j.at("vertices")) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
          throw ConfigError(where + ": vertices must be [x, y] pairs");
        }
        v.emplace_back(p[0].get<double>(), p[1].get<double>());
      }
      return TrajectorySpec(Polyline(std::move(v)));
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(where + ": " + e.what());
  }
  throw ConfigError(where + ": unknown trajectory type '" + type + "'");
}

// Spiral shared by every robot of a spiral fleet, if there is one.
std::optional<LogSpiral> common_spiral(const Fleet& fleet) {
  std::optional<LogSpiral> common;
  for (const auto& r : fleet.robots) {
    const TrajectorySpec* spec = &r;
    while (const auto* a = std::get_if<AntipodalOf>(&spec->variant())) spec = a->inner.get();
    const auto* s = std::get_if<LogSpiral>(&spec->variant());
    if (!s) return std::nullopt;
    if (common && (common->growth != s->growth || common->start_radius != s->start_radius)) {
      return std::nullopt;
    }
    common = *s;
  }
  return common;
}

}  // namespace

TrajectorySpec trajectory_from_json(const json& j, const std::string& where) {
  return parse_robot(j, where, {});
}

Fleet fleet_from_json(const json& robots) {
  if (!robots.is_array() || robots.empty()) {
    throw ConfigError("robots: must be a non-empty array");
  }
  std::vector<TrajectorySpec> out;
  for (std::size_t i = 0; i < robots.size(); ++i) {
    out.push_back(parse_robot(robots[i], "robots[" + std::to_string(i) + "]", out));
  }
  return Fleet(std::move(out));
}

FleetConfig parse_fleet_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");
  if (!doc.contains("version") || !doc.at("version").is_number_integer()) {
    throw ConfigError("config: missing integer field 'version'");
  }
  const int version = doc.at("version").get<int>();
  if (version != kFleetConfigVersion) {
    throw ConfigError("config: unsupported version " + std::to_string(version));
  }
  if (!doc.contains("robots")) throw ConfigError("config: missing field 'robots'");

  FleetConfig cfg{version, fleet_from_json(doc.at("robots")), {}};
  if (doc.contains("evaluation")) {
    const json& e = doc.at("evaluation");
    if (!e.is_object()) throw ConfigError("evaluation: must be an object");
    const std::string where = "evaluation";
    if (e.contains("horizon")) cfg.evaluation.horizon = number_field(e, "horizon", where);
    if (e.contains("epsilon")) cfg.evaluation.epsilon = number_field(e, "epsilon", where);
    if (e.contains("theta_steps")) {
      cfg.evaluation.theta_steps = static_cast<int>(number_field(e, "theta_steps", where));
    }
    if (e.contains("t_steps")) {
      cfg.evaluation.t_steps = static_cast<int>(number_field(e, "t_steps", where));
    }
    if (e.contains("window")) {
      const json& w = e.at("window");
      if (w.is_string() && w.get<std::string>() == "spiral") {
        cfg.evaluation.spiral_window = true;
      } else if (w.is_array() && w.size() == 2 && w[0].is_number() && w[1].is_number()) {
        cfg.evaluation.window = Window{w[0].get<double>(), w[1].get<double>()};
      } else {
        throw ConfigError("evaluation.window: expected [lo, hi] or \"spiral\"");
      }
    }
  }
  return cfg;
}

FleetConfig load_fleet_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return parse_fleet_config(doc);
}

json trajectory_to_json(const TrajectorySpec& spec) {
  return std::visit(
      Overloaded{[](const Ray& r) { return json{{"type", "ray"}, {"angle", r.angle}}; },
                 [](const LogSpiral& s) {
                   return json{{"type", "log_spiral"},
                               {"growth", s.growth},
                               {"start_radius", s.start_radius},
                               {"start_phase", s.start_phase},
                               {"chirality",
                                s.chirality == Chirality::kCounterClockwise ? "ccw" : "cw"}};
                 },
                 [](const AntipodalOf& a) {
                   return json{{"type", "antipodal"}, {"of", trajectory_to_json(*a.inner)}};
                 },
                 [](const Polyline& p) {
                   json v = json::array();
                   for (const Point2& q : p.vertices()) v.push_back({q.x, q.y});
                   return json{{"type", "polyline"}, {"vertices", v}};
                 }},
      spec.variant());
}

json fleet_to_json(const Fleet& fleet) {
  json out = json::array();
  for (const auto& r : fleet.robots) out.push_back(trajectory_to_json(r));
  return out;
}

EvalOptions resolve_eval_options(const FleetConfig& config) {
  const EvalSettings& s = config.evaluation;
  EvalOptions opt;
  if (s.spiral_window) {
    const auto spiral = common_spiral(config.fleet);
    if (!spiral) {
      throw ConfigError("evaluation.window: \"spiral\" needs robots that are all log spirals "
                        "(or antipodes) with one growth and start radius");
    }
    const Window w = spiral_window(spiral->growth, spiral->start_radius,
                                   defaults::kSpiralMinWindowLogSpan);
    opt.window = w;
    opt.horizon = spiral_horizon(spiral->growth, spiral->start_radius, w);
    opt.epsilon = spiral->start_radius;
    opt.t_steps = defaults::kSpiralTimeSteps;
  }
  if (s.window) opt.window = s.window;
  if (s.horizon) opt.horizon = *s.horizon;
  if (s.epsilon) opt.epsilon = s.epsilon;
  if (s.theta_steps) opt.theta_steps = *s.theta_steps;
  if (s.t_steps) opt.t_steps = *s.t_steps;
  return opt;
}

}  // namespace shoreline
