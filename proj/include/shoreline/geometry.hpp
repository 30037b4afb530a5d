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

#ifndef SHORELINE_GEOMETRY_HPP_
#define SHORELINE_GEOMETRY_HPP_

#include <cmath>
#include <numbers>
#include <span>

namespace shoreline {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Angles closer than this are treated as equal.
inline constexpr double kAngleTolerance = 1e-12;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Point2() = default;
  constexpr Point2(double x_, double y_) : x(x_), y(y_) {}

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
  friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Point2, Point2) = default;

  double norm() const { return std::hypot(x, y); }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline double distance(Point2 a, Point2 b) { return (a - b).norm(); }

inline Point2 unit_vector(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Rotation about the origin.
inline Point2 rotate(Point2 p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// Maps any finite angle into [0, 2π).
double normalize_angle(double theta);

/// Inner product of p with the unit normal (cos θ, sin θ).
inline double support(Point2 p, double theta) {
  return p.x * std::cos(theta) + p.y * std::sin(theta);
}

/// A line {p : support(p, theta) = delta} in canonical normal form:
/// delta >= 0 and theta in [0, 2π). Construction with a negative delta
/// flips the normal.
class Line {
 public:
  Line(double theta, double delta);

  double theta() const { return theta_; }
  double delta() const { return delta_; }
  Point2 normal() const { return unit_vector(theta_); }

  // Point of the line closest to the origin.
  Point2 foot() const { return delta_ * normal(); }

  Line scaled(double factor) const { return Line(theta_, delta_ * factor); }

 private:
  double theta_;
  double delta_;
};

/// Line through two distinct points.
Line line_through(Point2 a, Point2 b);

double distance_point_line(Point2 p, const Line& l);

/// Cone with apex at the origin.
struct Cone {
  double bisector = 0.0;
  double half_angle = kPi;

  Cone() = default;
  Cone(double bisector_, double half_angle_);

  // Closed containment test; the apex itself is contained.
  bool contains(Point2 p, double tol = kAngleTolerance) const;
  // Open containment test (boundary rays excluded).
  bool contains_strictly(Point2 p, double tol = kAngleTolerance) const;
};

struct AngularGap {
  double gap = 0.0;
  double bisector = 0.0;
};

/// Largest circular gap between consecutive directions, and the direction of
/// its midpoint. Equal gaps (within kAngleTolerance) resolve to the smallest
/// bisector. Throws std::invalid_argument("no directions") on empty input.
AngularGap max_angular_gap(std::span<const double> angles);

}  // namespace shoreline

#endif  // SHORELINE_GEOMETRY_HPP_
