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

#ifndef SHORELINE_REPORT_HPP_
#define SHORELINE_REPORT_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "shoreline/certifier.hpp"
#include "shoreline/defaults.hpp"
#include "shoreline/evaluator.hpp"
#include "shoreline/lemmas.hpp"
#include "shoreline/optimizer.hpp"
#include "shoreline/trajectory.hpp"

namespace shoreline {

// Schema tags written into every document's "schema" field.
inline constexpr const char* kCrReportSchema = "shoreline.cr_report/1";
inline constexpr const char* kCertificateSchema = "shoreline.cone_certificate/1";
inline constexpr const char* kOptimizeSchema = "shoreline.optimize_result/1";
inline constexpr const char* kLemmaSchema = "shoreline.lemma_summary/1";

// Provenance attached to every document.
struct Provenance {
  std::string source;  // config path or "library"
  std::optional<std::uint64_t> seed;
};

nlohmann::json to_json(const CRReport& report, const Fleet& fleet, const Provenance& prov);
nlohmann::json to_json(const ConeCertificate& cert, const Fleet& fleet, const Provenance& prov);
nlohmann::json to_json(const OptimizeResult& result, int n, const SpiralOptimizeParams& params,
                       const Provenance& prov);
nlohmann::json to_json(const LemmaSummary& summary, const Provenance& prov);

/// Key-sorted, indented text of a document; byte-identical for equal input.
std::string emit_report(const nlohmann::json& doc);

template <class T, class... Extra>
std::string emit_report(const T& value, const Extra&... extra) {
  return emit_report(to_json(value, extra...));
}

// ---------------------------------------------------------------------------
// Vector rendering.
// ---------------------------------------------------------------------------

struct Style {
  std::string stroke = "#000000";
  double width = 1.5;
  std::string dash;  // SVG stroke-dasharray, empty for solid
  std::string fill = "none";
  double opacity = 1.0;
};

struct TrajectoryLayer {
  std::string id;
  TrajectorySpec spec;
  double horizon = 1.0;
  Style style;
};

struct LineLayer {
  std::string id;
  Line line;
  Style style;
};

struct ConeLayer {
  std::string id;
  Cone cone;
  double radius = 1.0;
  Style style;
};

// Ellipse region scaled by `scale` (the time budget) about the origin.
struct EllipseLayer {
  std::string id;
  EllipseRegion region;
  double scale = 1.0;
  Style style;
};

struct PointLayer {
  std::string id;
  Point2 at;
  std::string label;
  Style style;
};

using Layer = std::variant<TrajectoryLayer, LineLayer, ConeLayer, EllipseLayer, PointLayer>;

struct RenderSpec {
  int width = defaults::kCanvasPixels;
  int height = defaults::kCanvasPixels;
  double world_radius = 1.0;  // visible square is [-r, r]^2
  int curve_samples = defaults::kCurveSamples;
  std::vector<Layer> layers;
};

/// Scalable vector graphics document for the scene.
std::string render_svg(const RenderSpec& scene);

/// Boundary samples of an ellipse layer in world coordinates.
std::vector<Point2> ellipse_outline(const EllipseRegion& region, double scale, int samples);

/// Scene for a stored report document (CR report, certificate).
/// Throws std::invalid_argument on an unknown schema.
RenderSpec scene_for_report(const nlohmann::json& doc, std::optional<double> world_radius);

/// Figure of the two-robot argument: both reachable ellipses after unit time
/// in the normalized frame, plus the line y = −1/2 − zeta. Both robots must
/// have y >= 0 (the frame the certificate reflects into).
RenderSpec two_robot_scene(Point2 robot1, Point2 robot2, double zeta);

}  // namespace shoreline

#endif  // SHORELINE_REPORT_HPP_
