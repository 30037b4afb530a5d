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

#ifndef SHORELINE_OPTIMIZER_HPP_
#define SHORELINE_OPTIMIZER_HPP_

#include <functional>

#include "shoreline/defaults.hpp"
#include "shoreline/evaluator.hpp"

namespace shoreline {

struct OptimizeResult {
  double parameter = 0.0;
  double value = 0.0;
  int evaluations = 0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  bool converged = false;
};

using ScalarObjective = std::function<double(double)>;

/// Golden-section minimization on [lo, hi] until the bracket is narrower than
/// tol. Returns the bracket midpoint and its objective value; `converged` is
/// false when max_iter ran out first.
OptimizeResult golden_section(const ScalarObjective& objective, double lo, double hi, double tol,
                              int max_iter = defaults::kGoldenMaxIter);

/// Uniform pre-scan of `prescan` points, then golden section on the cells
/// adjacent to the best scan point.
OptimizeResult minimize_scalar(const ScalarObjective& objective, double lo, double hi, double tol,
                               int prescan = defaults::kPrescanPoints,
                               int max_iter = defaults::kGoldenMaxIter);

struct SpiralEvalParams {
  double start_radius = defaults::kSpiralStartRadius;
  int theta_steps = defaults::kThetaSteps;
  int t_steps = defaults::kSpiralTimeSteps;
  double min_window_log_span = defaults::kSpiralMinWindowLogSpan;
  int horizon_retries = defaults::kSpiralHorizonRetries;
};

/// Measurement window for a spiral of the given growth: one guard turn past
/// the start radius, spanning at least e^{min_log_span}.
Window spiral_window(double growth, double start_radius, double min_log_span);

/// Time at which a spiral started at start_radius reaches radius.
double spiral_time_to_radius(double growth, double start_radius, double radius);

/// Horizon that leaves two guard turns beyond the window's upper end.
double spiral_horizon(double growth, double start_radius, const Window& window);

/// Steady-state competitive ratio of the n-robot spiral fleet (n = 1 or 2).
/// Enlarges the horizon by one turn per retry if coverage falls short.
CRReport spiral_cr(int n, double growth, const SpiralEvalParams& params = {});

struct SpiralOptimizeParams {
  SpiralEvalParams eval;
  double lo = defaults::kGrowthLo;
  double hi = defaults::kGrowthHi;
  double tol = defaults::kGrowthTol;
  int prescan = defaults::kPrescanPoints;
  int max_iter = defaults::kGoldenMaxIter;
};

/// Best growth rate for the single spiral (n = 1) or the antipodal double
/// spiral (n = 2).
OptimizeResult optimize_spiral(int n, const SpiralOptimizeParams& params = {});

}  // namespace shoreline

#endif  // SHORELINE_OPTIMIZER_HPP_
