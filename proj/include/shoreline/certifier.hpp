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

#ifndef SHORELINE_CERTIFIER_HPP_
#define SHORELINE_CERTIFIER_HPP_

#include <optional>
#include <span>
#include <vector>

#include "shoreline/defaults.hpp"
#include "shoreline/geometry.hpp"
#include "shoreline/trajectory.hpp"

namespace shoreline {

// ---------------------------------------------------------------------------
// Reflection inequality on the right triangle OMB.
// ---------------------------------------------------------------------------

/// Thrown when a lemma oracle is asked to run outside its hypothesis.
class HypothesisViolated : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct OmbResult {
  double phi = 0.0;
  int grid = 0;
  double min_excess = 0.0;  // min of OK + KL - OB
  Point2 k;                 // argmin on MB
  Point2 l;                 // argmin on OB
};

/// Brute force of OK + KL - OB over a grid x grid sample of K in MB and L in
/// OB, for the right triangle with O at the origin, M = (cos φ, 0),
/// B = (cos φ, sin φ) (so OB = 1 and ∠BOM = φ). Pairs with both K and L
/// within exclusion_radius of B are skipped. φ > π/4 throws
/// HypothesisViolated unless negative_control is set.
OmbResult omb_oracle(double phi, int grid, bool negative_control = false,
                     double exclusion_radius = 0.0);

// ---------------------------------------------------------------------------
// Time to visit the far side of a 2π/3 cone and leave it.
// ---------------------------------------------------------------------------

/// f(λ) = ½√(3λ²+1) + (√3/4)(1−λ): path length O → K(λ) → side OB.
double cone_exit_objective(double lambda);
double cone_exit_derivative(double lambda);
double cone_exit_second_derivative(double lambda);

struct ConeExitMinimum {
  double lambda = 0.0;
  double value = 0.0;
};

/// Grid scan of [0, 1], golden-section refinement, then bisection on the
/// sign of f′ inside the final bracket.
ConeExitMinimum min_cone_exit(int grid);

// ---------------------------------------------------------------------------
// Empty cones and snapshot lower bounds.
// ---------------------------------------------------------------------------

struct EmptyCone {
  Cone cone;
  // Every robot sits at the origin: any line closer than the robots could
  // travel is still unhit, so the competitive ratio is unbounded.
  bool degenerate = false;
};

/// Cone of target_half_angle with no robot strictly inside at time d, centred
/// in the widest angular gap between off-origin robots. Requires the gap to
/// be at least 2·target_half_angle + 2·gamma.
std::optional<EmptyCone> empty_cone(const Fleet& fleet, double d, double target_half_angle,
                                    double gamma, double origin_tol = defaults::kOriginTol);

struct SnapshotParams {
  double gamma = defaults::kSnapshotGamma;      // n >= 4: cone half-angle π/n − γ
  double epsilon = defaults::kSnapshotEpsilon;  // n >= 4 (d+εd) and n = 3 ((1/√3+ε′)d)
  double zeta = defaults::kSnapshotZeta;        // n = 2: line y = −(1/2+ζ)d
  double origin_tol = defaults::kOriginTol;
};

struct ConeCertificate {
  int n = 0;
  Cone cone;
  double snapshot_time = 0.0;
  double bound = 1.0;            // certified for the given parameters
  double limit_bound = 1.0;      // value as the parameters tend to 0
  double certified_bound = 1.0;  // witness ratio with every finite parameter applied
  Line witness_line{0.0, 0.0};
  bool degenerate = false;
  SnapshotParams params;
  std::vector<Point2> robot_positions;
};

/// Competitive-ratio lower bound read off the fleet's positions at time d.
ConeCertificate snapshot_lower_bound(const Fleet& fleet, double d, int n,
                                     const SnapshotParams& params = {});

// ---------------------------------------------------------------------------
// Unit-time reachable ellipses of the two-robot argument.
// ---------------------------------------------------------------------------

/// Points reachable within unit time by a robot that starts at the origin and
/// ends at distance delta in direction theta: an ellipse with foci O and the
/// end point, major axis 1.
class EllipseRegion {
 public:
  EllipseRegion(double delta, double theta);

  double delta() const { return delta_; }
  double theta() const { return theta_; }
  double h() const { return 0.5 * delta_; }
  // Semi-minor axis √(1−δ²)/2.
  double b() const { return 0.5 * std::sqrt(1.0 - delta_ * delta_); }
  Point2 focus() const { return delta_ * unit_vector(theta_); }
  Point2 center() const { return h() * unit_vector(theta_); }
  // Boundary point at parameter s in [0, 2π).
  Point2 boundary(double s) const;

 private:
  double delta_;
  double theta_;
};

double ellipse_q(double x, double y, const EllipseRegion& region);
double ellipse_q(double x, double y, double delta, double theta);

/// |p| + |p − robot_end| <= time_budget.
bool reach_oracle(Point2 p, Point2 robot_end, double time_budget);

struct Quadratic {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double discriminant() const { return b * b - 4.0 * a * c; }
};

/// q(x, y, δ, θ) as a polynomial in x for fixed y.
Quadratic ellipse_q_in_x(double y, const EllipseRegion& region);

/// Closed-form discriminant of q(x, −1/2−ζ, δ, θ) in x.
double discriminant(double delta, double theta, double zeta);

/// B² − 4AC of the expanded polynomial; must agree with discriminant().
double discriminant_expanded(double delta, double theta, double zeta);

struct SweepResult {
  double max_value = 0.0;
  double delta = 0.0;
  double theta = 0.0;
  double zeta = 0.0;
  std::size_t cells = 0;
};

SweepResult discriminant_sweep(std::span<const double> delta_grid,
                               std::span<const double> theta_grid,
                               std::span<const double> zeta_list);

/// Lowest point of the ellipse boundary, by golden-section search over the
/// boundary parameter.
double ellipse_min_y(const EllipseRegion& region);

}  // namespace shoreline

#endif  // SHORELINE_CERTIFIER_HPP_
