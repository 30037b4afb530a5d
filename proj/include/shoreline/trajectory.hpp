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

#ifndef SHORELINE_TRAJECTORY_HPP_
#define SHORELINE_TRAJECTORY_HPP_

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "shoreline/geometry.hpp"

namespace shoreline {

enum class Chirality { kCounterClockwise, kClockwise };

/// Straight unit-speed motion from the origin.
struct Ray {
  double angle = 0.0;
};

/// Logarithmic spiral r(φ) = r0·e^{b(φ−φ0)} traversed at unit speed starting
/// from radius r0 at phase φ0.
struct LogSpiral {
  double growth = 0.2;
  double start_radius = 1.0;
  double start_phase = 0.0;
  Chirality chirality = Chirality::kCounterClockwise;
};

class TrajectorySpec;

/// Point reflection of another trajectory through the origin.
struct AntipodalOf {
  std::shared_ptr<const TrajectorySpec> inner;
};

/// Piecewise-linear path through vertices, starting at the origin, walked at
/// unit speed. The robot rests at the last vertex afterwards.
class Polyline {
 public:
  explicit Polyline(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  double length() const { return cumulative_.back(); }
  Point2 at(double arc_length) const;

 private:
  std::vector<Point2> vertices_;
  std::vector<double> cumulative_;
};

/// Immutable description of one robot's path.
class TrajectorySpec {
 public:
  using Variant = std::variant<Ray, LogSpiral, AntipodalOf, Polyline>;

  TrajectorySpec(Ray r);
  TrajectorySpec(LogSpiral s);
  TrajectorySpec(Polyline p);
  TrajectorySpec(AntipodalOf a);

  static TrajectorySpec antipodal(const TrajectorySpec& inner);

  const Variant& variant() const { return v_; }
  std::string kind() const;

 private:
  Variant v_;
};

/// Robot location at time t (t >= 0, else std::domain_error "negative time").
Point2 position(const TrajectorySpec& spec, double t);

/// Max over consecutive uniform samples on [0, horizon] of |Δp|/Δt.
double speed_check(const TrajectorySpec& spec, double horizon, int samples);

/// Default scan resolution for first_hit_time, as a fraction of the horizon.
inline constexpr int kHitScanSteps = 4096;

/// Smallest t in [0, horizon] with support(position(t), l.theta) >= l.delta,
/// located by a uniform scan followed by bisection down to tol.
std::optional<double> first_hit_time(const TrajectorySpec& spec, const Line& l, double horizon,
                                     double tol, int scan_steps = kHitScanSteps);

/// Same trajectory rotated about the origin by angle.
TrajectorySpec rotated(const TrajectorySpec& spec, double angle);

struct Fleet {
  std::vector<TrajectorySpec> robots;

  explicit Fleet(std::vector<TrajectorySpec> r);
  std::size_t size() const { return robots.size(); }
};

/// n rays at angles offset + 2πk/n.
Fleet ray_fleet(int n, double offset = 0.0);

/// A single spiral (n = 1) or the spiral plus its antipode (n = 2).
Fleet spiral_fleet(int n, double growth, double start_radius = 1.0);

Fleet rotated(const Fleet& fleet, double angle);

// Earliest hit over the fleet.
std::optional<double> first_hit_time(const Fleet& fleet, const Line& l, double horizon,
                                     double tol, int scan_steps = kHitScanSteps);

}  // namespace shoreline

#endif  // SHORELINE_TRAJECTORY_HPP_
