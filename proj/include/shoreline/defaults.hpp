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

#ifndef SHORELINE_DEFAULTS_HPP_
#define SHORELINE_DEFAULTS_HPP_

// Every numeric default used by the library and the CLI.

namespace shoreline::defaults {

// Evaluator.
inline constexpr int kThetaSteps = 720;
inline constexpr int kTimeSteps = 4096;
inline constexpr double kEpsilonFraction = 1e-3;   // epsilon = fraction * horizon
inline constexpr double kTimeMinFraction = 1e-2;   // t_min = fraction * min(epsilon, window lo)

// Spiral measurement (optimizer and "spiral" windows in fleet configs).
inline constexpr int kSpiralTimeSteps = 8192;
inline constexpr double kSpiralStartRadius = 1.0;
inline constexpr double kSpiralMinWindowLogSpan = 10.0;  // window hi / lo >= e^10
inline constexpr int kSpiralHorizonRetries = 3;

// Optimizer.
inline constexpr double kGrowthLo = 0.05;
inline constexpr double kGrowthHi = 2.0;
inline constexpr double kGrowthTol = 1e-4;
inline constexpr int kPrescanPoints = 32;
inline constexpr int kGoldenMaxIter = 200;

// Certifier.
inline constexpr int kLemmaGrid = 1000;
inline constexpr double kSnapshotGamma = 1e-6;
inline constexpr double kSnapshotEpsilon = 1e-6;
inline constexpr double kSnapshotZeta = 1e-6;
inline constexpr double kOriginTol = 1e-12;
inline constexpr int kEllipseSamples = 100000;

// Rendering.
inline constexpr int kCanvasPixels = 800;
inline constexpr int kCurveSamples = 512;

}  // namespace shoreline::defaults

#endif  // SHORELINE_DEFAULTS_HPP_
