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

#include "shoreline/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <thread>

#include "parallel.hpp"

namespace shoreline {

UncoveredDirection::UncoveredDirection(double theta, double coverage, const std::string& what)
    : std::runtime_error(what), theta_(theta), coverage_(coverage) {}

std::vector<double> TimeGrid::times() const {
  if (!(horizon > 0.0) || steps < 2) {
    throw std::invalid_argument("time grid needs horizon > 0 and at least 2 steps");
  }
  if (!(t_min > 0.0) || t_min > horizon) {
    throw std::invalid_argument("time grid needs 0 < t_min <= horizon");
  }
  std::vector<double> t(static_cast<std::size_t>(steps));
  t[0] = 0.0;
  const int m = steps - 1;  // log-spaced samples
  const double log_ratio = std::log(horizon / t_min);
  for (int i = 1; i <= m; ++i) {
    t[static_cast<std::size_t>(i)] =
        (m == 1) ? horizon : t_min * std::exp(log_ratio * (i - 1) / (m - 1));
  }
  t.back() = horizon;
  return t;
}

namespace {

constexpr double kCrossingRelTol = 1e-13;
constexpr double kPeakRelTol = 1e-10;
constexpr int kMaxRefineIter = 200;

// Fleet positions cached on the time grid; shared read-only across directions.
class FleetSampler {
 public:
  FleetSampler(const Fleet& fleet, const TimeGrid& grid)
      : fleet_(fleet), times_(grid.times()), horizon_(grid.horizon) {
    positions_.reserve(fleet.size() * times_.size());
    for (const auto& robot : fleet.robots) {
      for (double t : times_) positions_.push_back(position(robot, t));
    }
  }

  DirectionProfile profile(double theta) const;

 private:
  double support_at(double t, double c, double s) const {
    double h = -std::numeric_limits<double>::infinity();
    for (const auto& robot : fleet_.robots) {
      const Point2 p = position(robot, t);
      h = std::max(h, c * p.x + s * p.y);
    }
    return h;
  }

  double sampled(std::size_t k, double c, double s) const {
    const std::size_t n = times_.size();
    double h = -std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < fleet_.size(); ++r) {
      const Point2& p = positions_[r * n + k];
      h = std::max(h, c * p.x + s * p.y);
    }
    return h;
  }

  // First time in (lo, hi] where support exceeds level, given
  // support(lo) <= level < support(hi).
  double crossing(double lo, double hi, double level, double c, double s) const {
    for (int i = 0; i < kMaxRefineIter && hi - lo > kCrossingRelTol * hi; ++i) {
      const double mid = 0.5 * (lo + hi);
      (support_at(mid, c, s) > level ? hi : lo) = mid;
    }
    return hi;
  }

  // Golden-section maximization of support on [lo, hi].
  std::pair<double, double> peak(double lo, double hi, double c, double s) const {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = support_at(x1, c, s);
    double f2 = support_at(x2, c, s);
    for (int i = 0; i < kMaxRefineIter && hi - lo > kPeakRelTol * hi; ++i) {
      if (f1 >= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - inv_phi * (hi - lo);
        f1 = support_at(x1, c, s);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + inv_phi * (hi - lo);
        f2 = support_at(x2, c, s);
      }
    }
    return f1 >= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
  }

  const Fleet& fleet_;
  std::vector<double> times_;
  double horizon_;
  std::vector<Point2> positions_;  // robot-major
};

DirectionProfile FleetSampler::profile(double theta) const {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  DirectionProfile out;
  out.theta = theta;

  double running = 0.0;
  bool prev_record = false;
  for (std::size_t k = 0; k < times_.size(); ++k) {
    const double h = sampled(k, c, s);
    if (h > running) {
      double onset = 0.0;
      if (k > 0) onset = prev_record ? times_[k - 1] : crossing(times_[k - 1], times_[k], running, c, s);
      out.records.push_back({times_[k], h, onset});
      running = h;
      prev_record = true;
      continue;
    }
    if (prev_record && k >= 1) {
      // The running max stalled: a local peak lies around times_[k-1].
      const double lo = times_[k >= 2 ? k - 2 : 0];
      const auto [t_peak, h_peak] = peak(lo, times_[k], c, s);
      ProfileRecord& last = out.records.back();
      if (h_peak > last.value && t_peak > last.onset) {
        last.time = t_peak;
        last.value = h_peak;
        running = h_peak;
      }
    }
    prev_record = false;
  }
  out.coverage = running;
  return out;
}

}  // namespace

DirectionProfile direction_profile(const Fleet& fleet, double theta, const TimeGrid& grid) {
  return FleetSampler(fleet, grid).profile(theta);
}

DirectionRatio records_to_ratio(const DirectionProfile& profile, double epsilon,
                                const std::optional<Window>& window) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");

  DirectionRatio best{-1.0, 0.0, 0.0};
  const auto consider = [&](double time, double delta) {
    if (delta < epsilon) return;
    if (window && !window->contains(delta)) return;
    const double ratio = time / delta;
    if (ratio > best.ratio) best = {ratio, delta, time};
  };

  const auto& recs = profile.records;
  for (std::size_t k = 0; k < recs.size(); ++k) {
    const ProfileRecord& r = recs[k];
    if (r.value < epsilon) continue;
    const double prev = k > 0 ? recs[k - 1].value : 0.0;
    if (prev < epsilon) {
      // Hit time of the line at distance epsilon, interpolated within the run.
      const double u = (epsilon - prev) / (r.value - prev);
      consider(r.onset + u * (r.time - r.onset), epsilon);
    } else {
      consider(r.onset, prev);
    }
    consider(r.time, r.value);
  }

  if (best.ratio < 0.0) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "direction uncovered: theta=" << profile.theta << " coverage=" << profile.coverage
        << (window ? " (no record inside the measurement window)" : "");
    throw UncoveredDirection(profile.theta, profile.coverage, msg.str());
  }
  return best;
}

int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  if (const char* cap = std::getenv("SHORELINE_MAX_WORKERS")) {
    const int c = std::atoi(cap);
    if (c >= 1) n = std::min(n, c);
  }
  return n;
}

CRReport evaluate_cr(const Fleet& fleet, const EvalOptions& options) {
  if (!(options.horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
  if (options.theta_steps < 1) throw std::invalid_argument("theta_steps must be >= 1");
  const double epsilon = options.epsilon.value_or(defaults::kEpsilonFraction * options.horizon);
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (options.window && !(options.window->lo > 0.0 && options.window->lo < options.window->hi)) {
    throw std::invalid_argument("window must satisfy 0 < lo < hi");
  }

  double floor_level = epsilon;
  if (options.window) floor_level = std::min(floor_level, options.window->lo);
  const double t_min =
      std::min(options.t_min.value_or(defaults::kTimeMinFraction * floor_level), options.horizon);

  TimeGrid grid{options.horizon, options.t_steps, t_min};
  const FleetSampler sampler(fleet, grid);

  const auto count = static_cast<std::size_t>(options.theta_steps);
  std::vector<DirectionProfile> profiles(count);
  std::vector<DirectionRatio> ratios(count);
  internal::parallel_for(count, worker_count(), [&](std::size_t j) {
    const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(count);
    profiles[j] = sampler.profile(theta);
    if (profiles[j].coverage < epsilon) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "direction uncovered: theta=" << theta << " coverage=" << profiles[j].coverage
          << " < epsilon=" << epsilon << " within horizon " << options.horizon;
      throw UncoveredDirection(theta, profiles[j].coverage, msg.str());
    }
    ratios[j] = records_to_ratio(profiles[j], epsilon, options.window);
  });

  CRReport report;
  report.grid = {options.theta_steps, options.t_steps, options.horizon, epsilon, t_min,
                 options.window};
  report.coverage_radius = std::numeric_limits<double>::infinity();
  std::size_t arg = 0;
  for (std::size_t j = 0; j < count; ++j) {
    if (ratios[j].ratio > ratios[arg].ratio) arg = j;
    report.coverage_radius = std::min(report.coverage_radius, profiles[j].coverage);
  }
  report.cr_estimate = ratios[arg].ratio;
  report.witness = Line(profiles[arg].theta, ratios[arg].witness_delta);
  report.witness_time = ratios[arg].witness_time;
  if (options.keep_profiles) report.profiles = std::move(profiles);
  return report;
}

}  // namespace shoreline
