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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>


namespace shoreline {

OptimizeResult golden_section(const ScalarObjective& objective, double lo, double hi, double tol,
                              int max_iter) {
  if (!(lo < hi)) throw std::invalid_argument("golden_section needs lo < hi");
  if (!(tol > 0.0)) throw std::invalid_argument("golden_section needs tol > 0");

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  OptimizeResult out;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  out.evaluations = 2;

  int iter = 0;
  while (hi - lo > tol && iter < max_iter) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = objective(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = objective(x2);
    }
    ++out.evaluations;
    ++iter;
  }
  out.converged = hi - lo <= tol;
  out.bracket_lo = lo;
  out.bracket_hi = hi;
  out.parameter = 0.5 * (lo + hi);
  out.value = objective(out.parameter);
  ++out.evaluations;
  return out;
}

OptimizeResult minimize_scalar(const ScalarObjective& objective, double lo, double hi, double tol,
                               int prescan, int max_iter) {
  if (!(lo < hi)) throw std::invalid_argument("minimize_scalar needs lo < hi");
  if (prescan < 3) throw std::invalid_argument("pre-scan needs at least 3 points");

  std::vector<double> xs(static_cast<std::size_t>(prescan));
  std::vector<double> fs(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(prescan - 1);
  }
  for (std::size_t i = 0; i < xs.size(); ++i) fs[i] = objective(xs[i]);
  const std::size_t best =
      static_cast<std::size_t>(std::min_element(fs.begin(), fs.end()) - fs.begin());
  const double a = xs[best == 0 ? 0 : best - 1];
  const double b = xs[std::min(best + 1, xs.size() - 1)];

  OptimizeResult out = golden_section(objective, a, b, tol, max_iter);
  out.evaluations += prescan;
  if (fs[best] < out.value) {
    // The bracket endpoint itself was better (minimum at the domain boundary).
    out.parameter = xs[best];
    out.value = fs[best];
  }
  return out;
}

Window spiral_window(double growth, double start_radius, double min_log_span) {
  const double turn = std::exp(kTwoPi * growth);
  const double lo = start_radius * turn;
  const double span = std::max(min_log_span, kTwoPi * growth);
  return {lo, lo * std::exp(span)};
}

double spiral_time_to_radius(double growth, double start_radius, double radius) {
  return (radius - start_radius) * std::sqrt(1.0 + growth * growth) / growth;
}

double spiral_horizon(double growth, double start_radius, const Window& window) {
  const double radius = window.hi * std::exp(2.0 * kTwoPi * growth);
  return spiral_time_to_radius(growth, start_radius, radius);
}

CRReport spiral_cr(int n, double growth, const SpiralEvalParams& params) {
  const Fleet fleet = spiral_fleet(n, growth, params.start_radius);
  const Window window = spiral_window(growth, params.start_radius, params.min_window_log_span);
  const double turn = std::exp(kTwoPi * growth);

  EvalOptions options;
  options.horizon = spiral_horizon(growth, params.start_radius, window);
  options.theta_steps = params.theta_steps;
  options.t_steps = params.t_steps;
  options.epsilon = params.start_radius;
  options.window = window;

  for (int attempt = 0;; ++attempt) {
    try {
      CRReport report = evaluate_cr(fleet, options);
      if (report.coverage_radius >= window.hi * turn) return report;
      if (attempt >= params.horizon_retries) {
        throw UncoveredDirection(report.witness.theta(), report.coverage_radius,
                                 "spiral coverage below the measurement window guard");
      }
    } catch (const UncoveredDirection&) {
      if (attempt >= params.horizon_retries) throw;
    }
    options.horizon *= turn;
  }
}

OptimizeResult optimize_spiral(int n, const SpiralOptimizeParams& params) {
  if (n != 1 && n != 2) throw std::invalid_argument("unsupported: spiral search is defined for n = 1 or 2");
  const ScalarObjective objective = [&](double b) { return spiral_cr(n, b, params.eval).cr_estimate; };
  return minimize_scalar(objective, params.lo, params.hi, params.tol, params.prescan, params.max_iter);
}

}  // namespace shoreline
