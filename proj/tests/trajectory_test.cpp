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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

namespace shoreline {
namespace {

TEST(PositionTest, RayMovesAtUnitSpeed) {
  const Point2 p = position(TrajectorySpec(Ray{0.0}), 2.5);
  EXPECT_DOUBLE_EQ(p.x, 2.5);
  EXPECT_DOUBLE_EQ(p.y, 0.0);
}

TEST(PositionTest, AntipodalReflectsThroughOrigin) {
  const auto spec = TrajectorySpec::antipodal(TrajectorySpec(Ray{0.0}));
  const Point2 p = position(spec, 1.0);
  EXPECT_DOUBLE_EQ(p.x, -1.0);
  EXPECT_NEAR(p.y, 0.0, 1e-15);
}

TEST(PositionTest, NegativeTimeThrows) {
  EXPECT_THROW(position(TrajectorySpec(Ray{0.0}), -1e-9), std::domain_error);
}

// Arc length from φ0 to φ is (√(1+b²)/b)(r(φ) − r0); with b = 1, r0 = 0.1 the
// phase reaches 1 rad after 0.1·√2·(e − 1).
TEST(PositionTest, SpiralArcLengthInversion) {
  const TrajectorySpec spiral(LogSpiral{1.0, 0.1, 0.0, Chirality::kCounterClockwise});
  const double t = 0.1 * std::sqrt(2.0) * (std::exp(1.0) - 1.0);
  const Point2 p = position(spiral, t);
  EXPECT_NEAR(p.norm(), 0.1 * std::exp(1.0), 1e-14);
  EXPECT_NEAR(std::atan2(p.y, p.x), 1.0, 1e-13);

  // Cross-check: numeric quadrature of the speed along r(φ) = r0 e^{bφ}.
  const int n = 200000;
  double length = 0.0;
  for (int i = 0; i < n; ++i) {
    const double phi = (i + 0.5) / n;
    length += 0.1 * std::exp(phi) * std::sqrt(2.0) / n;  // |dγ/dφ| = r√(1+b²)
  }
  EXPECT_NEAR(length, t, 1e-9);
}

TEST(PositionTest, ClockwiseSpiralMirrors) {
  const TrajectorySpec ccw(LogSpiral{0.3, 1.0, 0.0, Chirality::kCounterClockwise});
  const TrajectorySpec cw(LogSpiral{0.3, 1.0, 0.0, Chirality::kClockwise});
  for (double t : {0.0, 0.5, 3.0, 40.0}) {
    EXPECT_NEAR(position(ccw, t).x, position(cw, t).x, 1e-12);
    EXPECT_NEAR(position(ccw, t).y, -position(cw, t).y, 1e-12);
  }
}

TEST(PositionTest, PolylineReparameterizedByArcLength) {
  const TrajectorySpec p(Polyline({{0.0, 0.0}, {3.0, 0.0}, {3.0, 4.0}}));
  EXPECT_NEAR(position(p, 1.5).x, 1.5, 1e-15);
  const Point2 q = position(p, 5.0);
  EXPECT_NEAR(q.x, 3.0, 1e-15);
  EXPECT_NEAR(q.y, 2.0, 1e-15);
  EXPECT_EQ(position(p, 100.0), (Point2{3.0, 4.0}));  // rests at the end
}

TEST(TrajectorySpecTest, InvalidParametersRejected) {
  EXPECT_THROW(TrajectorySpec(LogSpiral{0.0, 1.0, 0.0, Chirality::kCounterClockwise}),
               std::invalid_argument);
  EXPECT_THROW(TrajectorySpec(LogSpiral{0.2, 0.0, 0.0, Chirality::kCounterClockwise}),
               std::invalid_argument);
  EXPECT_THROW(Polyline({{1.0, 0.0}, {2.0, 0.0}}), std::invalid_argument);
  EXPECT_THROW(Fleet({}), std::invalid_argument);
}

TEST(SpeedCheckTest, Ray) {
  EXPECT_NEAR(speed_check(TrajectorySpec(Ray{0.3}), 10.0, 100), 1.0, 1e-12);
}

TEST(SpeedCheckTest, Polyline) {
  const TrajectorySpec p(Polyline({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}}));
  EXPECT_NEAR(speed_check(p, 2.0, 201), 1.0, 1e-12);
}

TEST(SpeedCheckTest, SlowSpiral) {
  const TrajectorySpec s(LogSpiral{0.2, 1.0, 0.0, Chirality::kCounterClockwise});
  const double v = speed_check(s, 50.0, 20001);
  EXPECT_LE(v, 1.0 + 1e-6);
  EXPECT_GE(v, 1.0 - 1e-4);  // chords are slightly shorter than arcs
}

// Unit-speed contract for random parameters of every variant.
TEST(SpeedCheckTest, RandomVariantsNeverExceedUnitSpeed) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> growth(0.05, 2.0), radius(0.01, 3.0),
      angle(0.0, kTwoPi), coord(-5.0, 5.0);
  for (int i = 0; i < 40; ++i) {
    const TrajectorySpec spiral(LogSpiral{growth(rng), radius(rng), angle(rng),
                                          i % 2 ? Chirality::kClockwise
                                                : Chirality::kCounterClockwise});
    EXPECT_LE(speed_check(spiral, 20.0, 5000), 1.0 + 1e-6);
    EXPECT_LE(speed_check(TrajectorySpec::antipodal(spiral), 20.0, 5000), 1.0 + 1e-6);
    std::vector<Point2> v{{0.0, 0.0}};
    for (int k = 0; k < 6; ++k) v.emplace_back(coord(rng), coord(rng));
    EXPECT_LE(speed_check(TrajectorySpec(Polyline(v)), 60.0, 5000), 1.0 + 1e-6);
    EXPECT_LE(speed_check(TrajectorySpec(Ray{angle(rng)}), 20.0, 100), 1.0 + 1e-6);
  }
}

TEST(AntipodalTest, PreservesDistanceToOrigin) {
  const TrajectorySpec s(LogSpiral{0.6, 0.5, 1.0, Chirality::kCounterClockwise});
  const auto a = TrajectorySpec::antipodal(s);
  for (double t = 0.0; t < 100.0; t += 0.37) {
    EXPECT_NEAR(position(s, t).norm(), position(a, t).norm(), 1e-12);
  }
}

TEST(FirstHitTimeTest, RayHeadOn) {
  const auto t = first_hit_time(TrajectorySpec(Ray{0.0}), Line(0.0, 1.0), 10.0, 1e-9);
  ASSERT_TRUE(t);
  EXPECT_NEAR(*t, 1.0, 1e-9);
}

TEST(FirstHitTimeTest, ParallelRayNeverHits) {
  EXPECT_FALSE(first_hit_time(TrajectorySpec(Ray{kPi / 2.0}), Line(0.0, 1.0), 10.0, 1e-9));
}

TEST(FirstHitTimeTest, DiagonalRay) {
  const auto t = first_hit_time(TrajectorySpec(Ray{kPi / 4.0}), Line(0.0, 1.0), 10.0, 1e-9);
  ASSERT_TRUE(t);
  EXPECT_NEAR(*t, std::sqrt(2.0), 1e-9);
}

TEST(FirstHitTimeTest, MonotoneInDistance) {
  const TrajectorySpec s(LogSpiral{0.3, 0.1, 0.0, Chirality::kCounterClockwise});
  for (double theta : {0.0, 1.0, 2.5, 4.0}) {
    double prev = 0.0;
    for (double d = 0.05; d < 20.0; d *= 1.3) {
      const auto t = first_hit_time(s, Line(theta, d), 400.0, 1e-9);
      ASSERT_TRUE(t) << "theta=" << theta << " d=" << d;
      EXPECT_GE(*t, prev - 1e-9);
      prev = *t;
    }
  }
}

// n rays at 2πk/n reach every line with δ <= d·cos(π/n) by time d.
TEST(FirstHitTimeTest, RayFleetCoversWithinCosineBound) {
  for (int n : {3, 4, 5, 7}) {
    const Fleet fleet = ray_fleet(n);
    const double d = 2.0;
    for (int j = 0; j < 97; ++j) {
      const double theta = kTwoPi * j / 97.0;
      for (double frac : {0.25, 0.6, 1.0}) {
        const Line l(theta, frac * d * std::cos(kPi / n));
        const auto t = first_hit_time(fleet, l, 4.0, 1e-10);
        ASSERT_TRUE(t);
        EXPECT_LE(*t, d + 1e-8) << "n=" << n << " theta=" << theta;
      }
    }
  }
}

TEST(RotatedTest, RotatesEveryVariant) {
  const double a = 0.7;
  const TrajectorySpec s(LogSpiral{0.4, 1.0, 0.2, Chirality::kClockwise});
  const TrajectorySpec p(Polyline({{0.0, 0.0}, {1.0, 2.0}, {-1.0, 3.0}}));
  for (const TrajectorySpec& spec :
       {TrajectorySpec(Ray{0.3}), s, TrajectorySpec::antipodal(s), p}) {
    const TrajectorySpec r = rotated(spec, a);
    for (double t : {0.0, 0.4, 2.0, 7.0}) {
      const Point2 want = rotate(position(spec, t), a);
      EXPECT_NEAR(position(r, t).x, want.x, 1e-12);
      EXPECT_NEAR(position(r, t).y, want.y, 1e-12);
    }
  }
}

}  // namespace
}  // namespace shoreline
