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

#include "shoreline/optimizer.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

namespace shoreline {
namespace {

TEST(GoldenSectionTest, Parabola) {
  const OptimizeResult r = golden_section([](double x) { return (x - 2.0) * (x - 2.0); }, 0.0, 5.0,
                                          1e-8);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.parameter, 2.0, 1e-8);
  EXPECT_LE(r.bracket_hi - r.bracket_lo, 1e-8);
  EXPECT_GT(r.evaluations, 0);
}

TEST(GoldenSectionTest, MinimumAtEndpoint) {
  const OptimizeResult r = golden_section([](double x) { return x; }, 1.0, 3.0, 1e-9);
  EXPECT_NEAR(r.parameter, 1.0, 1e-9);
}

TEST(GoldenSectionTest, ReportsNonConvergence) {
  const OptimizeResult r = golden_section([](double x) { return std::cosh(x); }, -4.0, 4.0,
                                          1e-12, 5);
  EXPECT_FALSE(r.converged);
}

// Argmin is unchanged by a positive affine map of the objective and moves
// with a shift of the argument.
TEST(GoldenSectionTest, AffineInvariance) {
  const auto f = [](double x) { return std::exp(x) - 3.0 * x; };  // argmin ln 3
  // Roundoff flattens f near its minimum, so the argmin resolves only to
  // about √ε relative, well above the bracket tolerance.
  const double base = golden_section(f, -2.0, 4.0, 1e-9).parameter;
  EXPECT_NEAR(base, std::log(3.0), 1e-7);
  const auto scaled = [&](double x) { return 7.5 * f(x) - 11.0; };
  EXPECT_NEAR(golden_section(scaled, -2.0, 4.0, 1e-9).parameter, base, 1e-7);
  const auto shifted = [&](double x) { return f(x - 0.75); };
  EXPECT_NEAR(golden_section(shifted, -1.25, 4.75, 1e-9).parameter, base + 0.75, 1e-7);
}

TEST(MinimizeScalarTest, PrescanFindsGlobalBasin) {
  const auto f = [](double x) { return std::cos(3.0 * x) + 0.05 * (x - 4.0) * (x - 4.0); };
  // Dense scan as the reference.
  double best = 0.0, best_value = f(0.0);
  for (int i = 1; i <= 1000000; ++i) {
    const double x = 10.0 * i / 1000000.0;
    if (f(x) < best_value) best = x, best_value = f(x);
  }
  const OptimizeResult r = minimize_scalar(f, 0.0, 10.0, 1e-9, 32);
  EXPECT_NEAR(r.parameter, best, 1e-5);
  EXPECT_LE(r.value, best_value + 1e-12);
  // Golden section alone from the full bracket lands in another basin.
  EXPECT_GT(golden_section(f, 0.0, 10.0, 1e-9).value, r.value + 0.01);
}

TEST(SpiralWindowTest, GuardTurnAndSpan) {
  const Window w = spiral_window(0.2, 1.0, 10.0);
  EXPECT_NEAR(w.lo, std::exp(kTwoPi * 0.2), 1e-12);
  EXPECT_NEAR(w.hi, w.lo * std::exp(10.0), 1e-9);
  const Window wide = spiral_window(2.0, 1.0, 10.0);
  EXPECT_NEAR(wide.hi / wide.lo, std::exp(kTwoPi * 2.0), 1e-6 * wide.hi / wide.lo);
}

TEST(SpiralWindowTest, TimeToRadiusIsArcLength) {
  const double b = 0.5;
  EXPECT_NEAR(spiral_time_to_radius(b, 1.0, 3.0), 2.0 * std::sqrt(1.0 + b * b) / b, 1e-12);
}

// Reference ratios from an independent root-find of each direction's worst
// line (the point where the next arm first reaches the previous peak).
struct SpiralCase {
  int n;
  double growth;
  double cr;
};

class SpiralOracleTest : public ::testing::TestWithParam<SpiralCase> {};

TEST_P(SpiralOracleTest, MatchesReference) {
  const SpiralCase c = GetParam();
  const double cr = spiral_cr(c.n, c.growth).cr_estimate;
  EXPECT_NEAR(cr, c.cr, 1e-4 * c.cr) << "n=" << c.n << " b=" << c.growth;
}

INSTANTIATE_TEST_SUITE_P(Reference, SpiralOracleTest,
                         ::testing::Values(SpiralCase{1, 0.05, 26.42592996999101},
                                           SpiralCase{1, 0.2, 13.834326660733392},
                                           SpiralCase{1, 0.5, 22.01102503447363},
                                           SpiralCase{2, 0.3, 6.347379230337763},
                                           SpiralCase{2, 1.0, 5.64947611486467},
                                           SpiralCase{2, 2.0, 8.284080526880375}));

TEST(SpiralCrTest, StartRadiusDoesNotMatter) {
  SpiralEvalParams small;
  small.start_radius = 0.01;
  for (int n : {1, 2}) {
    const double a = spiral_cr(n, 0.4).cr_estimate;
    const double b = spiral_cr(n, 0.4, small).cr_estimate;
    EXPECT_NEAR(a, b, 1e-6 * a) << "n=" << n;
  }
}

TEST(SpiralCrTest, TightSpiralIsExpensive) {
  EXPECT_GT(spiral_cr(1, 0.05).cr_estimate, 1.9 * spiral_cr(1, 0.2125).cr_estimate);
}

TEST(OptimizeSpiralTest, SingleSpiralOptimum) {
  const OptimizeResult r = optimize_spiral(1);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.parameter, 0.21247, 2e-3);
  EXPECT_NEAR(r.value, 13.811135179461138, 1e-4 * 13.81);
}

TEST(OptimizeSpiralTest, UnsupportedCount) {
  EXPECT_THROW(optimize_spiral(3), std::invalid_argument);
  EXPECT_THROW(spiral_cr(0, 0.3), std::invalid_argument);
}

}  // namespace
}  // namespace shoreline
