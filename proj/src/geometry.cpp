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

#include "shoreline/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace shoreline {

double normalize_angle(double theta) {
  double a = std::fmod(theta, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2π.
  if (a >= kTwoPi) a = 0.0;
  return a;
}

Line::Line(double theta, double delta) {
  if (!std::isfinite(theta) || !std::isfinite(delta)) {
    throw std::invalid_argument("line parameters must be finite");
  }
  if (delta < 0.0) {
    theta += kPi;
    delta = -delta;
  }
  theta_ = normalize_angle(theta);
  delta_ = delta;
}

Line line_through(Point2 a, Point2 b) {
  const Point2 d = b - a;
  if (d.norm() == 0.0) throw std::invalid_argument("line_through: coincident points");
  const double theta = std::atan2(d.x, -d.y);  // normal is d rotated by -π/2
  return Line(theta, support(a, theta));
}

double distance_point_line(Point2 p, const Line& l) {
  return std::abs(support(p, l.theta()) - l.delta());
}

Cone::Cone(double bisector_, double half_angle_)
    : bisector(normalize_angle(bisector_)), half_angle(half_angle_) {
  if (!(half_angle > 0.0 && half_angle <= kPi)) {
    throw std::invalid_argument("cone half-angle must lie in (0, pi]");
  }
}

namespace {

// Angular offset of p from the bisector, in [0, π].
double offset_from(double bisector, Point2 p) {
  double a = std::abs(normalize_angle(std::atan2(p.y, p.x)) - bisector);
  return a > kPi ? kTwoPi - a : a;
}

}  // namespace

bool Cone::contains(Point2 p, double tol) const {
  if (p.x == 0.0 && p.y == 0.0) return true;
  return offset_from(bisector, p) <= half_angle + tol;
}

bool Cone::contains_strictly(Point2 p, double tol) const {
  if (p.x == 0.0 && p.y == 0.0) return false;
  if (half_angle >= kPi) return true;
  return offset_from(bisector, p) < half_angle - tol;
}

AngularGap max_angular_gap(std::span<const double> angles) {
  if (angles.empty()) throw std::invalid_argument("no directions");

  std::vector<double> sorted;
  sorted.reserve(angles.size());
  for (double a : angles) sorted.push_back(normalize_angle(a));
  std::sort(sorted.begin(), sorted.end());

  AngularGap best{-1.0, 0.0};
  const std::size_t n = sorted.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double from = sorted[i];
    const double gap = (i + 1 < n) ? sorted[i + 1] - from : sorted[0] + kTwoPi - from;
    const double mid = normalize_angle(from + 0.5 * gap);
    if (gap > best.gap + kAngleTolerance ||
        (std::abs(gap - best.gap) <= kAngleTolerance && mid < best.bisector)) {
      best = {gap, mid};
    }
  }
  return best;
}

}  // namespace shoreline
