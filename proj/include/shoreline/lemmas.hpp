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

#ifndef SHORELINE_LEMMAS_HPP_
#define SHORELINE_LEMMAS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "shoreline/defaults.hpp"

namespace shoreline {

enum class LemmaSuite { kAll, kOmb, kScaling, kEllipse, kDiscriminant };

LemmaSuite parse_lemma_suite(const std::string& name);
std::string to_string(LemmaSuite suite);

struct LemmaSuiteOptions {
  LemmaSuite suite = LemmaSuite::kAll;
  int grid = defaults::kLemmaGrid;
  int ellipse_samples = defaults::kEllipseSamples;
  std::uint64_t seed = 20190717;
  // Negative controls are run only when requested.
  bool omb_negative_control = false;
  double omb_negative_phi = 0.3 * 3.14159265358979323846;
  bool zeta_zero_diagnostic = false;
};

struct LemmaCheck {
  std::string name;
  std::string grid;       // human-readable grid description
  double extremal = 0.0;  // extremal value found by the sweep
  std::string detail;     // where the extremum sits
  bool passed = false;
  bool negative_control = false;
};

struct LemmaSummary {
  LemmaSuiteOptions options;
  std::vector<LemmaCheck> checks;
  bool all_passed() const;
};

/// Runs the numerical verification sweeps of every lower-bound lemma.
LemmaSummary run_lemma_suite(const LemmaSuiteOptions& options);

}  // namespace shoreline

#endif  // SHORELINE_LEMMAS_HPP_
