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

#include "shoreline/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "shoreline/optimizer.hpp"

namespace shoreline {

OmbResult omb_oracle(double phi, int grid, bool negative_control, double exclusion_radius) {
  if (!(phi > 0.0) || grid < 2) throw std::invalid_argument("omb_oracle needs phi > 0 and grid >= 2");
  if (phi > kPi / 4.0 + kAngleTolerance && !negative_control) {
    throw HypothesisViolated("lemma hypothesis violated: phi > pi/4");
  }
  if (phi >= kPi / 2.0) throw std::invalid_argument("omb_oracle needs phi < pi/2");

  const Point2 b = unit_vector(phi);
  const double mx = b.x;
  OmbResult out{phi, grid, std::numeric_limits<double>::infinity(), {}, {}};
  for (int i = 0; i < grid; ++i) {
    const double s = static_cast<double>(i) / (grid - 1);
    const Point2 k{mx, s * b.y};
    const double ok = k.norm();
    const bool k_near_b = distance(k, b) < exclusion_radius;
    for (int j = 0; j < grid; ++j) {
      const double u = static_cast<double>(j) / (grid - 1);
      const Point2 l = u * b;
      if (k_near_b && distance(l, b) < exclusion_radius) continue;
      const double excess = ok + distance(k, l) - 1.0;
      if (excess < out.min_excess) {
        out.min_excess = excess;
        out.k = k;
        out.l = l;
      }
    }
  }
  return out;
}

namespace {
const double kSqrt3 = std::sqrt(3.0);
}

double cone_exit_objective(double lambda) {
  return 0.5 * std::sqrt(3.0 * lambda * lambda + 1.0) + kSqrt3 / 4.0 * (1.0 - lambda);
}

double cone_exit_derivative(double lambda) {
  return 3.0 * lambda / (2.0 * std::sqrt(3.0 * lambda * lambda + 1.0)) - kSqrt3 / 4.0;
}

double cone_exit_second_derivative(double lambda) {
  return 1.5 / std::pow(3.0 * lambda * lambda + 1.0, 1.5);
}

ConeExitMinimum min_cone_exit(int grid) {
  if (grid < 3) throw std::invalid_argument("min_cone_exit needs grid >= 3");
  const OptimizeResult coarse = minimize_scalar(cone_exit_objective, 0.0, 1.0, 1e-12, grid);

  // f is flat to rounding near the minimum; finish on the sign of f′.
  double lo = std::max(0.0, coarse.bracket_lo - 1e-6);
  double hi = std::min(1.0, coarse.bracket_hi + 1e-6);
  if (cone_exit_derivative(lo) < 0.0 && cone_exit_derivative(hi) > 0.0) {
    for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
      const double mid = 0.5 * (lo + hi);
      (cone_exit_derivative(mid) > 0.0 ? hi : lo) = mid;
    }
    const double lambda = 0.5 * (lo + hi);
    return {lambda, cone_exit_objective(lambda)};
  }
  return {coarse.parameter, coarse.value};
}

namespace {

std::vector<Point2> snapshot(const Fleet& fleet, double d) {
  std::vector<Point2> out;
  out.reserve(fleet.size());
  for (const auto& r : fleet.robots) out.push_back(position(r, d));
  return out;
}

std::optional<EmptyCone> find_empty_cone(const std::vector<Point2>& positions,
                                         double target_half_angle, double margin,
                                         double origin_tol) {
  std::vector<double> angles;
  for (const Point2& p : positions) {
    if (p.norm() > origin_tol) angles.push_back(std::atan2(p.y, p.x));
  }
  if (angles.empty()) return EmptyCone{Cone(0.0, kPi), true};
  const AngularGap gap = max_angular_gap(angles);
  if (gap.gap + kAngleTolerance < 2.0 * target_half_angle + 2.0 * margin) return std::nullopt;
  return EmptyCone{Cone(gap.bisector, target_half_angle), false};
}

ConeCertificate degenerate_certificate(ConeCertificate cert) {
  const double inf = std::numeric_limits<double>::infinity();
  cert.cone = Cone(0.0, kPi);
  cert.degenerate = true;
  cert.bound = cert.limit_bound = cert.certified_bound = inf;
  cert.witness_line = Line(0.0, cert.params.epsilon * cert.snapshot_time);
  return cert;
}

}  // namespace

std::optional<EmptyCone> empty_cone(const Fleet& fleet, double d, double target_half_angle,
                                    double gamma, double origin_tol) {
  if (!(d > 0.0)) throw std::invalid_argument("empty_cone needs d > 0");
  if (!(gamma > 0.0)) throw std::invalid_argument("empty_cone needs gamma > 0");
  if (!(target_half_angle > 0.0 && target_half_angle <= kPi)) {
    throw std::invalid_argument("target half-angle must lie in (0, pi]");
  }
  return find_empty_cone(snapshot(fleet, d), target_half_angle, gamma, origin_tol);
}

ConeCertificate snapshot_lower_bound(const Fleet& fleet, double d, int n,
                                     const SnapshotParams& params) {
  if (!(d > 0.0)) throw std::invalid_argument("snapshot time must be positive");
  if (n < 2) throw std::invalid_argument("snapshot lower bounds need n >= 2");
  if (fleet.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("fleet size does not match n");
  }

  ConeCertificate cert;
  cert.n = n;
  cert.snapshot_time = d;
  cert.params = params;
  cert.robot_positions = snapshot(fleet, d);

  bool all_at_origin = true;
  for (const Point2& p : cert.robot_positions) all_at_origin &= p.norm() <= params.origin_tol;
  if (all_at_origin) return degenerate_certificate(std::move(cert));

  if (n >= 4) {
    if (!(params.gamma > 0.0 && params.gamma < kPi / n)) {
      throw std::invalid_argument("gamma must lie in (0, pi/n)");
    }
    const double phi = kPi / n - params.gamma;
    const auto found = find_empty_cone(cert.robot_positions, phi, params.gamma, params.origin_tol);
    if (!found) throw std::logic_error("no empty cone: pigeonhole step failed");
    cert.cone = found->cone;
    const double reach = (1.0 + params.epsilon) * d;
    const Point2 a = reach * unit_vector(cert.cone.bisector - phi);
    const Point2 b = reach * unit_vector(cert.cone.bisector + phi);
    cert.witness_line = line_through(a, b);
    cert.bound = 1.0 / std::cos(phi);
    cert.limit_bound = 1.0 / std::cos(kPi / n);
    cert.certified_bound = d / cert.witness_line.delta();
    return cert;
  }

  if (n == 3) {
    const double phi = kPi / 3.0;
    const auto found = find_empty_cone(cert.robot_positions, phi, 0.0, params.origin_tol);
    if (!found) throw std::logic_error("no empty cone: pigeonhole step failed");
    cert.cone = found->cone;
    cert.witness_line = Line(cert.cone.bisector, (1.0 / kSqrt3 + params.epsilon) * d);
    cert.bound = kSqrt3 / (1.0 + kSqrt3 * params.epsilon);
    cert.limit_bound = kSqrt3;
    cert.certified_bound = d / cert.witness_line.delta();
    return cert;
  }

  // n == 2: rotate robot 1 onto the non-negative x-axis and reflect so robot 2
  // has y >= 0; the witness is then the line y = −(1/2+ζ)d.
  if (!(params.zeta > 0.0)) throw std::invalid_argument("zeta must be positive");
  const Point2 r1 = cert.robot_positions[0];
  const double alpha = r1.norm() > params.origin_tol ? std::atan2(r1.y, r1.x) : 0.0;
  const Point2 r2 = rotate(cert.robot_positions[1], -alpha);
  const bool reflected = r2.y < 0.0;
  const double normal = alpha + (reflected ? kPi / 2.0 : -kPi / 2.0);
  const double delta = (0.5 + params.zeta) * d;
  cert.witness_line = Line(normal, delta);
  cert.cone = Cone(normal, kPi / 2.0);
  cert.bound = (1.5 + params.zeta) / (0.5 + params.zeta);
  cert.limit_bound = 3.0;
  cert.certified_bound = cert.bound;
  return cert;
}

EllipseRegion::EllipseRegion(double delta, double theta) : delta_(delta), theta_(theta) {
  if (!std::isfinite(delta) || !std::isfinite(theta)) {
    throw std::invalid_argument("ellipse parameters must be finite");
  }
  if (delta >= 1.0) throw std::domain_error("degenerate ellipse");
  if (delta < 0.0) throw std::invalid_argument("ellipse delta must lie in [0, 1)");
  if (theta < -kAngleTolerance || theta > kPi + kAngleTolerance) {
    throw std::invalid_argument("ellipse theta must lie in [0, pi]");
  }
}

Point2 EllipseRegion::boundary(double s) const {
  const Point2 u = unit_vector(theta_);
  const Point2 v{-u.y, u.x};
  return center() + (0.5 * std::cos(s)) * u + (b() * std::sin(s)) * v;
}

double ellipse_q(double x, double y, const EllipseRegion& region) {
  const double c = std::cos(region.theta());
  const double s = std::sin(region.theta());
  const double along = c * x + s * y - region.h();
  const double across = -s * x + c * y;
  const double b = region.b();
  return 4.0 * along * along + across * across / (b * b) - 1.0;
}

double ellipse_q(double x, double y, double delta, double theta) {
  return ellipse_q(x, y, EllipseRegion(delta, theta));
}

bool reach_oracle(Point2 p, Point2 robot_end, double time_budget) {
  if (!(time_budget > 0.0)) throw std::invalid_argument("time budget must be positive");
  return p.norm() + distance(p, robot_end) <= time_budget;
}

Quadratic ellipse_q_in_x(double y, const EllipseRegion& region) {
  const double c = std::cos(region.theta());
  const double s = std::sin(region.theta());
  const double b2 = region.b() * region.b();
  const double shift = s * y - region.h();
  return {4.0 * c * c + s * s / b2,                       //
          8.0 * c * shift - 2.0 * s * c * y / b2,         //
          4.0 * shift * shift + c * c * y * y / b2 - 1.0};
}

namespace {
void check_discriminant_args(double delta, double zeta) {
  if (!(delta >= 0.0) || delta >= 1.0 - 1e-9) {
    throw std::domain_error("discriminant needs delta in [0, 1 - 1e-9)");
  }
  if (!(zeta >= 0.0)) throw std::invalid_argument("zeta must be non-negative");
}
}  // namespace

double discriminant(double delta, double theta, double zeta) {
  check_discriminant_args(delta, zeta);
  const double num =
      delta * delta + 2.0 * delta * (2.0 * zeta + 1.0) * std::sin(theta) + 4.0 * zeta * (zeta + 1.0);
  return -16.0 * num / (1.0 - delta * delta);
}

double discriminant_expanded(double delta, double theta, double zeta) {
  check_discriminant_args(delta, zeta);
  return ellipse_q_in_x(-0.5 - zeta, EllipseRegion(delta, theta)).discriminant();
}

SweepResult discriminant_sweep(std::span<const double> delta_grid,
                               std::span<const double> theta_grid,
                               std::span<const double> zeta_list) {
  if (delta_grid.empty() || theta_grid.empty() || zeta_list.empty()) {
    throw std::invalid_argument("discriminant_sweep needs non-empty grids");
  }
  SweepResult out;
  out.max_value = -std::numeric_limits<double>::infinity();
  for (double z : zeta_list) {
    for (double d : delta_grid) {
      if (d > 1.0 - 1e-6) throw std::domain_error("sweep delta must be <= 1 - 1e-6");
      for (double t : theta_grid) {
        const double v = discriminant(d, t, z);
        ++out.cells;
        if (v > out.max_value) {
          out.max_value = v;
          out.delta = d;
          out.theta = t;
          out.zeta = z;
        }
      }
    }
  }
  return out;
}

double ellipse_min_y(const EllipseRegion& region) {
  const auto y = [&](double s) { return region.boundary(s).y; };
  return minimize_scalar(y, 0.0, kTwoPi, 1e-12, 64).value;
}

}  // namespace shoreline
