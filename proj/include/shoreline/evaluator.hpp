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

#ifndef SHORELINE_EVALUATOR_HPP_
#define SHORELINE_EVALUATOR_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shoreline/defaults.hpp"
#include "shoreline/geometry.hpp"
#include "shoreline/trajectory.hpp"

namespace shoreline {

/// Raised when some direction is never covered up to the required distance
/// within the horizon, i.e. the fleet does not solve the instance.
class UncoveredDirection : public std::runtime_error {
 public:
  UncoveredDirection(double theta, double coverage, const std::string& what);
  double theta() const { return theta_; }
  double coverage() const { return coverage_; }

 private:
  double theta_;
  double coverage_;
};

/// Sample times: t = 0 followed by steps-1 log-spaced times from t_min to horizon.
struct TimeGrid {
  double horizon = 1.0;
  int steps = defaults::kTimeSteps;
  double t_min = 1e-5;

  std::vector<double> times() const;
};

/// One running-maximum record of the fleet's support in a fixed direction.
///   time   first time the running max reaches `value`
///   value  the new running max level
///   onset  first time the running max exceeds the previous record's level
///          (the hit time of a line just beyond it)
struct ProfileRecord {
  double time = 0.0;
  double value = 0.0;
  double onset = 0.0;
};

struct DirectionProfile {
  double theta = 0.0;
  std::vector<ProfileRecord> records;
  double coverage = 0.0;
};

struct Window {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double delta) const { return delta >= lo && delta <= hi; }
};

struct DirectionRatio {
  double ratio = 0.0;
  double witness_delta = 0.0;
  double witness_time = 0.0;
};

struct EvalOptions {
  double horizon = 1.0;
  int theta_steps = defaults::kThetaSteps;
  int t_steps = defaults::kTimeSteps;
  std::optional<double> epsilon;  // default: kEpsilonFraction * horizon
  std::optional<Window> window;
  std::optional<double> t_min;    // default: kTimeMinFraction * min(epsilon, window lo)
  bool keep_profiles = false;
};

struct GridInfo {
  int theta_steps = 0;
  int t_steps = 0;
  double horizon = 0.0;
  double epsilon = 0.0;
  double t_min = 0.0;
  std::optional<Window> window;
};

struct CRReport {
  double cr_estimate = 0.0;
  Line witness{0.0, 0.0};
  double witness_time = 0.0;
  double coverage_radius = 0.0;
  GridInfo grid;
  std::vector<DirectionProfile> profiles;
};

/// Running-max records of max_r support(position_r(t), θ) over the grid.
DirectionProfile direction_profile(const Fleet& fleet, double theta, const TimeGrid& grid);

/// Worst hit-time/distance ratio over lines in this direction with distance
/// >= epsilon (and inside window, when given). Throws UncoveredDirection when
/// no record reaches epsilon.
DirectionRatio records_to_ratio(const DirectionProfile& profile, double epsilon,
                                const std::optional<Window>& window = std::nullopt);

/// Competitive ratio estimate over a uniform grid of directions.
CRReport evaluate_cr(const Fleet& fleet, const EvalOptions& options);

/// Worker threads used for data-parallel sweeps; capped by the
/// SHORELINE_MAX_WORKERS environment variable.
int worker_count();

}  // namespace shoreline

#endif  // SHORELINE_EVALUATOR_HPP_
