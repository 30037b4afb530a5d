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

#include "shoreline/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shoreline {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void validate(const LogSpiral& s) {
  if (!(s.growth > 0.0) || !std::isfinite(s.growth)) {
    throw std::invalid_argument("spiral growth must be positive");
  }
  if (!(s.start_radius > 0.0) || !std::isfinite(s.start_radius)) {
    throw std::invalid_argument("spiral start radius must be positive");
  }
  if (!std::isfinite(s.start_phase)) throw std::invalid_argument("spiral phase must be finite");
}

Point2 spiral_position(const LogSpiral& s, double t) {
  // Arc length from φ0 is (√(1+b²)/b)(r − r0), so r grows linearly in t.
  const double b = s.growth;
  const double r = s.start_radius + b * t / std::sqrt(1.0 + b * b);
  const double turned = std::log(r / s.start_radius) / b;
  const double phase =
      s.start_phase + (s.chirality == Chirality::kCounterClockwise ? turned : -turned);
  return r * unit_vector(phase);
}

}  // namespace

Polyline::Polyline(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("polyline needs at least one vertex");
  for (const Point2& v : vertices_) {
    if (!v.finite()) throw std::invalid_argument("polyline vertex is not finite");
  }
  if (vertices_.front() != Point2{0.0, 0.0}) {
    throw std::invalid_argument("polyline must start at the origin");
  }
  cumulative_.reserve(vertices_.size());
  cumulative_.push_back(0.0);
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    cumulative_.push_back(cumulative_.back() + distance(vertices_[i - 1], vertices_[i]));
  }
}

Point2 Polyline::at(double s) const {
  if (s >= cumulative_.back()) return vertices_.back();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  const std::size_t i = static_cast<std::size_t>(it - cumulative_.begin());  // i >= 1
  const double seg = cumulative_[i] - cumulative_[i - 1];
  const double u = seg > 0.0 ? (s - cumulative_[i - 1]) / seg : 0.0;
  return vertices_[i - 1] + u * (vertices_[i] - vertices_[i - 1]);
}

TrajectorySpec::TrajectorySpec(Ray r) : v_(r) {
  if (!std::isfinite(r.angle)) throw std::invalid_argument("ray angle must be finite");
}
TrajectorySpec::TrajectorySpec(LogSpiral s) : v_(s) { validate(s); }
TrajectorySpec::TrajectorySpec(Polyline p) : v_(std::move(p)) {}
TrajectorySpec::TrajectorySpec(AntipodalOf a) : v_(std::move(a)) {
  if (!std::get<AntipodalOf>(v_).inner) throw std::invalid_argument("antipodal of nothing");
}

TrajectorySpec TrajectorySpec::antipodal(const TrajectorySpec& inner) {
  return TrajectorySpec(AntipodalOf{std::make_shared<const TrajectorySpec>(inner)});
}

std::string TrajectorySpec::kind() const {
  return std::visit(Overloaded{[](const Ray&) { return std::string("ray"); },
                               [](const LogSpiral&) { return std::string("log_spiral"); },
                               [](const AntipodalOf&) { return std::string("antipodal"); },
                               [](const Polyline&) { return std::string("polyline"); }},
                    v_);
}

Point2 position(const TrajectorySpec& spec, double t) {
  if (t < 0.0) throw std::domain_error("negative time");
  return std::visit(
      Overloaded{[t](const Ray& r) { return t * unit_vector(r.angle); },
                 [t](const LogSpiral& s) { return spiral_position(s, t); },
                 [t](const AntipodalOf& a) { return -position(*a.inner, t); },
                 [t](const Polyline& p) { return p.at(t); }},
      spec.variant());
}

double speed_check(const TrajectorySpec& spec, double horizon, int samples) {
  if (!(horizon > 0.0) || samples < 2) {
    throw std::invalid_argument("speed_check needs horizon > 0 and samples >= 2");
  }
  double worst = 0.0;
  const double dt = horizon / (samples - 1);
  Point2 prev = position(spec, 0.0);
  for (int i = 1; i < samples; ++i) {
    const Point2 cur = position(spec, i * dt);
    worst = std::max(worst, distance(cur, prev) / dt);
    prev = cur;
  }
  return worst;
}

std::optional<double> first_hit_time(const TrajectorySpec& spec, const Line& l, double horizon,
                                     double tol, int scan_steps) {
  if (!(horizon > 0.0) || !(tol > 0.0) || scan_steps < 1) {
    throw std::invalid_argument("first_hit_time needs horizon > 0, tol > 0, scan_steps >= 1");
  }
  const auto reached = [&](double t) {
    return support(position(spec, t), l.theta()) >= l.delta();
  };
  if (reached(0.0)) return 0.0;
  const double step = horizon / scan_steps;
  for (int k = 1; k <= scan_steps; ++k) {
    const double t = (k == scan_steps) ? horizon : k * step;
    if (!reached(t)) continue;
    double lo = (k - 1) * step;
    double hi = t;
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      (reached(mid) ? hi : lo) = mid;
    }
    return hi;
  }
  return std::nullopt;
}

TrajectorySpec rotated(const TrajectorySpec& spec, double angle) {
  return std::visit(
      Overloaded{[angle](const Ray& r) { return TrajectorySpec(Ray{r.angle + angle}); },
                 [angle](const LogSpiral& s) {
                   LogSpiral out = s;
                   out.start_phase += angle;
                   return TrajectorySpec(out);
                 },
                 [angle](const AntipodalOf& a) {
                   return TrajectorySpec::antipodal(rotated(*a.inner, angle));
                 },
                 [angle](const Polyline& p) {
                   std::vector<Point2> v;
                   v.reserve(p.vertices().size());
                   for (const Point2& q : p.vertices()) v.push_back(rotate(q, angle));
                   v.front() = {0.0, 0.0};
                   return TrajectorySpec(Polyline(std::move(v)));
                 }},
      spec.variant());
}

Fleet::Fleet(std::vector<TrajectorySpec> r) : robots(std::move(r)) {
  if (robots.empty()) throw std::invalid_argument("fleet needs at least one robot");
}

Fleet ray_fleet(int n, double offset) {
  if (n < 1) throw std::invalid_argument("ray fleet needs n >= 1");
  std::vector<TrajectorySpec> robots;
  robots.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) robots.emplace_back(Ray{offset + kTwoPi * k / n});
  return Fleet(std::move(robots));
}

Fleet spiral_fleet(int n, double growth, double start_radius) {
  if (n != 1 && n != 2) throw std::invalid_argument("spiral fleets exist for n = 1 or 2 only");
  TrajectorySpec spiral(LogSpiral{growth, start_radius, 0.0, Chirality::kCounterClockwise});
  std::vector<TrajectorySpec> robots{spiral};
  if (n == 2) robots.push_back(TrajectorySpec::antipodal(spiral));
  return Fleet(std::move(robots));
}

Fleet rotated(const Fleet& fleet, double angle) {
  std::vector<TrajectorySpec> robots;
  robots.reserve(fleet.size());
  for (const auto& r : fleet.robots) robots.push_back(rotated(r, angle));
  return Fleet(std::move(robots));
}

std::optional<double> first_hit_time(const Fleet& fleet, const Line& l, double horizon,
                                     double tol, int scan_steps) {
  std::optional<double> best;
  for (const auto& r : fleet.robots) {
    const auto t = first_hit_time(r, l, horizon, tol, scan_steps);
    if (t && (!best || *t < *best)) best = t;
  }
  return best;
}

}  // namespace shoreline
