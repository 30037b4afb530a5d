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

// Acceptance run: one PASS/FAIL line per criterion, with wall time. Exits
// non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "shoreline/certifier.hpp"
#include "shoreline/defaults.hpp"
#include "shoreline/evaluator.hpp"
#include "shoreline/optimizer.hpp"
#include "shoreline/trajectory.hpp"

namespace {

using namespace shoreline;

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;  // 0: no limit stated
  std::function<Outcome()> run;
};

std::string Fmt(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

double RayCr(int n, int theta_steps = defaults::kThetaSteps) {
  EvalOptions o;
  o.horizon = 10.0;
  o.theta_steps = theta_steps;
  return evaluate_cr(ray_fleet(n), o).cr_estimate;
}

Outcome RayUpperBound() {
  Outcome r{true, ""};
  for (int n : {3, 4, 5, 6, 8, 12}) {
    const double cr = RayCr(n);
    const double want = 1.0 / std::cos(kPi / n);
    r.passed &= std::abs(cr - want) <= 1e-3;
    r.detail += Fmt("n=%d cr=%.9f want=%.9f; ", n, cr, want);
  }
  return r;
}

// The worst directions of the n-ray fleet are the bisectors θ = (2k+1)π/n, so
// the direction grid must be a multiple of 2n. Where 720 is not, take the
// next multiple of 2n above it.
Outcome LowerBoundTightness() {
  Outcome r{true, ""};
  for (int n = 4; n <= 12; ++n) {
    const int steps = ((defaults::kThetaSteps + 2 * n - 1) / (2 * n)) * (2 * n);
    const double cr = RayCr(n, steps);
    SnapshotParams p;
    p.gamma = 1e-6;
    const double bound = snapshot_lower_bound(ray_fleet(n), 1.0, n, p).bound;
    r.passed &= std::abs(cr - bound) <= 1e-4;
    r.detail += Fmt("n=%d cr=%.7f bound=%.7f; ", n, cr, bound);
  }
  return r;
}

Outcome ThreeRobots() {
  SnapshotParams p;
  p.epsilon = 1e-6;
  const double bound = snapshot_lower_bound(ray_fleet(3), 1.0, 3, p).bound;
  const double cr = RayCr(3);
  const bool ok = std::abs(bound - std::sqrt(3.0)) <= 1e-5 && std::abs(cr - 2.0) <= 1e-3;
  return {ok, Fmt("lower=%.9f upper(3 rays)=%.9f open gap [%.6f, %.6f]", bound, cr, bound, cr)};
}

Outcome TwoRobots() {
  SnapshotParams p;
  p.zeta = 1e-6;
  const Fleet pair({TrajectorySpec(Ray{0.0}), TrajectorySpec(Ray{2.0})});
  const double bound = snapshot_lower_bound(pair, 1.0, 2, p).bound;
  std::vector<double> deltas, thetas;
  for (int i = 0; i < 100; ++i) deltas.push_back(0.999 * i / 99.0);
  for (int j = 0; j < 256; ++j) thetas.push_back(kPi * j / 255.0);
  const std::vector<double> zetas{1e-6, 1e-3, 0.1};
  const SweepResult s = discriminant_sweep(deltas, thetas, zetas);
  const bool ok = std::abs(bound - 3.0) <= 1e-5 && s.max_value < 0.0;
  return {ok, Fmt("bound=%.9f sweep max=%.6g at delta=%.4f theta=%.4f zeta=%g over %zu cells",
                  bound, s.max_value, s.delta, s.theta, s.zeta, s.cells)};
}

Outcome Spiral(int n, double lo, double hi) {
  const OptimizeResult r = optimize_spiral(n);
  const bool ok = r.value >= lo && r.value <= hi;
  return {ok, Fmt("CR*=%.6f b*=%.5f evaluations=%d converged=%s band=[%.2f, %.2f]", r.value,
                  r.parameter, r.evaluations, r.converged ? "yes" : "no", lo, hi)};
}

Outcome Omb() {
  Outcome r{true, ""};
  for (int k = 1; k <= 4; ++k) {
    const OmbResult o = omb_oracle(k * kPi / 16.0, 1000);
    r.passed &= o.min_excess >= -1e-9;
    r.detail += Fmt("phi=%dpi/16 min=%.3g; ", k, o.min_excess);
  }
  const OmbResult control = omb_oracle(0.3 * kPi, 1000, /*negative_control=*/true);
  r.passed &= control.min_excess < 0.0;
  r.detail += Fmt("control phi=0.3pi min=%.6f", control.min_excess);
  return r;
}

Outcome ConeExit() {
  const ConeExitMinimum m = min_cone_exit(1000);
  const double residual = std::abs(cone_exit_derivative(m.lambda));
  const bool ok = std::abs(m.lambda - 1.0 / 3.0) <= 1e-8 &&
                  std::abs(m.value - std::sqrt(3.0) / 2.0) <= 1e-12 && residual < 1e-8;
  return {ok, Fmt("lambda*=%.12f value=%.15f |f'|=%.3g", m.lambda, m.value, residual)};
}

Outcome EllipseOracle() {
  std::mt19937_64 rng(20190717);
  std::uniform_real_distribution<double> coord(-1.0, 1.0), d(0.0, 0.999), t(0.0, kPi);
  long agree = 0, compared = 0, skipped = 0;
  while (compared < 100000) {
    const Point2 p{coord(rng), coord(rng)};
    const EllipseRegion e(d(rng), t(rng));
    const double q = ellipse_q(p.x, p.y, e);
    if (std::abs(q) <= 1e-6) {
      ++skipped;
      continue;
    }
    ++compared;
    agree += (q <= 0.0) == reach_oracle(p, e.focus(), 1.0);
  }
  return {agree == compared,
          Fmt("agree %ld/%ld (skipped %ld near-boundary samples)", agree, compared, skipped)};
}

// Outward zig-zag polylines: each robot turns by a random angle near 2 rad
// per leg while its radius grows geometrically, so every direction is swept.
Fleet RandomPolylineFleet(std::mt19937_64& rng, int robots) {
  std::uniform_real_distribution<double> jitter(-0.4, 0.4), turn(1.6, 2.6), grow(1.3, 1.9);
  std::vector<TrajectorySpec> specs;
  for (int r = 0; r < robots; ++r) {
    std::vector<Point2> v{{0.0, 0.0}};
    double phase = kTwoPi * r / robots + jitter(rng);
    double radius = 0.3 + 0.2 * (jitter(rng) + 0.4);
    for (int k = 0; k < 18; ++k) {
      v.push_back({radius * std::cos(phase), radius * std::sin(phase)});
      phase += turn(rng);
      radius *= grow(rng);
    }
    specs.emplace_back(Polyline(v));
  }
  return Fleet(specs);
}

Outcome Soundness() {
  std::mt19937_64 rng(20190717);
  std::uniform_int_distribution<int> size(2, 6);
  int fleets = 0, snapshots = 0, violations = 0;
  double worst_margin = INFINITY;
  for (int f = 0; f < 50; ++f) {
    const int n = size(rng);
    const Fleet fleet = RandomPolylineFleet(rng, n);
    EvalOptions o;
    o.horizon = 200.0;
    o.epsilon = 0.5;
    const CRReport rep = evaluate_cr(fleet, o);
    ++fleets;
    // Snapshot times whose witness line falls inside the evaluated range.
    for (int s = 0; s < 8; ++s) {
      const double d = 2.0 * std::pow(rep.coverage_radius / 2.0, s / 7.0);
      const ConeCertificate cert = snapshot_lower_bound(fleet, d, n);
      const double delta = cert.witness_line.delta();
      if (delta < *o.epsilon || delta > rep.coverage_radius) continue;
      ++snapshots;
      const double margin = rep.cr_estimate - cert.bound;
      worst_margin = std::min(worst_margin, margin);
      if (!(margin >= -1e-6)) ++violations;
    }
  }
  return {violations == 0 && snapshots >= 50,
          Fmt("%d fleets, %d snapshots, %d violations, min(cr - bound)=%.6f", fleets, snapshots,
              violations, worst_margin)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "ray fleet upper bound 1/cos(pi/n)", 5.0, RayUpperBound},
      {2, "lower bound meets ray fleet for n>=4", 2.0, LowerBoundTightness},
      {3, "three robots: sqrt(3) lower, 2 upper", 0.0, ThreeRobots},
      {4, "two robots: bound 3 and negative discriminant", 5.0, TwoRobots},
      {5, "single spiral optimum", 120.0, [] { return Spiral(1, 13.76, 13.86); }},
      {6, "double spiral optimum", 120.0, [] { return Spiral(2, 5.21, 5.32); }},
      {7, "reflection inequality on OMB", 0.0, Omb},
      {8, "cone exit time sqrt(3)/2", 0.0, ConeExit},
      {9, "ellipse region equals reach oracle", 0.0, EllipseOracle},
      {10, "evaluator never below certificates", 0.0, Soundness},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = Fmt("%.2fs", secs);
    if (c.time_limit_s > 0.0) {
      timing += Fmt(" (limit %.0fs)", c.time_limit_s);
      if (secs > c.time_limit_s) {
        out.passed = false;
        out.detail += " [over time limit]";
      }
    }
    std::printf("%s [%d] %s: %s %s\n", out.passed ? "PASS" : "FAIL", c.id, c.title,
                out.detail.c_str(), timing.c_str());
    std::fflush(stdout);
    failed += !out.passed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
