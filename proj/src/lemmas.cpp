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

#include "shoreline/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "shoreline/certifier.hpp"

namespace shoreline {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return v;
}

void omb_checks(const LemmaSuiteOptions& o, std::vector<LemmaCheck>& out) {
  const std::string grid = std::to_string(o.grid) + "x" + std::to_string(o.grid);
  for (int k : {1, 2, 3, 4}) {
    const double phi = k * kPi / 16.0;
    const OmbResult r = omb_oracle(phi, o.grid);
    out.push_back({"omb phi=" + std::to_string(k) + "pi/16", grid, r.min_excess,
                   "K=(" + fmt(r.k.x) + "," + fmt(r.k.y) + ") L=(" + fmt(r.l.x) + "," +
                       fmt(r.l.y) + ")",
                   r.min_excess >= -1e-9, false});
  }
  if (o.omb_negative_control) {
    const OmbResult r = omb_oracle(o.omb_negative_phi, o.grid, /*negative_control=*/true);
    out.push_back({"omb negative control phi=" + fmt(o.omb_negative_phi), grid, r.min_excess,
                   std::string(r.min_excess < 0.0 ? "violation" : "no violation; minimum") +
                       " at K=(" + fmt(r.k.x) + "," + fmt(r.k.y) + ") L=(" + fmt(r.l.x) +
                       "," + fmt(r.l.y) + ")",
                   r.min_excess < 0.0, true});
  }
}

void scaling_checks(const LemmaSuiteOptions& o, std::vector<LemmaCheck>& out) {
  const ConeExitMinimum m = min_cone_exit(o.grid);
  const double residual = std::abs(cone_exit_derivative(m.lambda));
  const bool ok = std::abs(m.lambda - 1.0 / 3.0) <= 1e-8 &&
                  std::abs(m.value - std::sqrt(3.0) / 2.0) <= 1e-12 && residual < 1e-8 &&
                  cone_exit_second_derivative(m.lambda) > 0.0;
  out.push_back({"scaling min f", std::to_string(o.grid) + " + golden + f' bisection", m.value,
                 "lambda*=" + fmt(m.lambda) + " |f'|=" + fmt(residual), ok, false});
}

void ellipse_checks(const LemmaSuiteOptions& o, std::vector<LemmaCheck>& out) {
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  int compared = 0;
  int disagreements = 0;
  std::string first_bad = "none";
  for (int i = 0; i < o.ellipse_samples; ++i) {
    const Point2 p{coord(rng), coord(rng)};
    const EllipseRegion region(dist(rng), angle(rng));
    const double q = ellipse_q(p.x, p.y, region);
    if (std::abs(q) <= 1e-6) continue;
    ++compared;
    if ((q < 0.0) != reach_oracle(p, region.focus(), 1.0)) {
      if (disagreements++ == 0) {
        first_bad = "p=(" + fmt(p.x) + "," + fmt(p.y) + ") delta=" + fmt(region.delta()) +
                    " theta=" + fmt(region.theta());
      }
    }
  }
  const double agreement = compared ? 1.0 - static_cast<double>(disagreements) / compared : 0.0;
  out.push_back({"ellipse region == reach oracle", std::to_string(o.ellipse_samples) + " samples",
                 agreement, "compared=" + std::to_string(compared) + " first mismatch: " + first_bad,
                 compared > 0 && disagreements == 0, false});

  double lowest = 1.0;
  std::string where;
  for (double d : linspace(0.0, 0.999, 100)) {
    for (double t : linspace(0.0, kPi, 64)) {
      const double y = ellipse_min_y(EllipseRegion(d, t));
      if (y < lowest) {
        lowest = y;
        where = "delta=" + fmt(d) + " theta=" + fmt(t);
      }
    }
  }
  out.push_back({"ellipse min y >= -1/2", "100x64 (delta, theta)", lowest, where,
                 lowest >= -0.5 - 1e-9, false});
}

void discriminant_checks(const LemmaSuiteOptions& o, std::vector<LemmaCheck>& out) {
  const auto deltas = linspace(0.0, 0.999, 100);
  const auto thetas = linspace(0.0, kPi, 256);
  const std::vector<double> zetas{1e-6, 1e-3, 0.1};
  const SweepResult s = discriminant_sweep(deltas, thetas, zetas);
  out.push_back({"discriminant < 0", "100 delta x 256 theta x 3 zeta", s.max_value,
                 "delta=" + fmt(s.delta) + " theta=" + fmt(s.theta) + " zeta=" + fmt(s.zeta),
                 s.max_value < 0.0, false});

  double worst = 0.0;
  std::string where = "none";
  for (double z : zetas) {
    for (double d : deltas) {
      for (double t : thetas) {
        const double closed = discriminant(d, t, z);
        const double expanded = discriminant_expanded(d, t, z);
        const double rel = std::abs(closed - expanded) / std::max(1.0, std::abs(closed));
        if (rel > worst) {
          worst = rel;
          where = "delta=" + fmt(d) + " theta=" + fmt(t) + " zeta=" + fmt(z);
        }
      }
    }
  }
  out.push_back({"discriminant closed form == B^2-4AC", "100 delta x 256 theta x 3 zeta", worst,
                 where, worst <= 1e-9, false});

  if (o.zeta_zero_diagnostic) {
    const std::vector<double> zero{0.0};
    const SweepResult z = discriminant_sweep(deltas, thetas, zero);
    out.push_back({"discriminant zeta=0 boundary", "100 delta x 256 theta", z.max_value,
                   "tangent at delta=" + fmt(z.delta) + " theta=" + fmt(z.theta),
                   std::abs(z.max_value) <= 1e-12 && z.delta == 0.0, true});
  }
}

}  // namespace

LemmaSuite parse_lemma_suite(const std::string& name) {
  if (name == "all") return LemmaSuite::kAll;
  if (name == "omb") return LemmaSuite::kOmb;
  if (name == "scaling") return LemmaSuite::kScaling;
  if (name == "ellipse") return LemmaSuite::kEllipse;
  if (name == "discriminant") return LemmaSuite::kDiscriminant;
  throw std::invalid_argument("unknown lemma suite '" + name + "'");
}

std::string to_string(LemmaSuite suite) {
  switch (suite) {
    case LemmaSuite::kAll: return "all";
    case LemmaSuite::kOmb: return "omb";
    case LemmaSuite::kScaling: return "scaling";
    case LemmaSuite::kEllipse: return "ellipse";
    case LemmaSuite::kDiscriminant: return "discriminant";
  }
  return "all";
}

bool LemmaSummary::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed; });
}

LemmaSummary run_lemma_suite(const LemmaSuiteOptions& options) {
  if (options.grid < 3) throw std::invalid_argument("lemma grid must be >= 3");
  LemmaSummary s{options, {}};
  const auto wants = [&](LemmaSuite x) {
    return options.suite == LemmaSuite::kAll || options.suite == x;
  };
  if (wants(LemmaSuite::kOmb)) omb_checks(options, s.checks);
  if (wants(LemmaSuite::kScaling)) scaling_checks(options, s.checks);
  if (wants(LemmaSuite::kEllipse)) ellipse_checks(options, s.checks);
  if (wants(LemmaSuite::kDiscriminant)) discriminant_checks(options, s.checks);
  return s;
}

}  // namespace shoreline
