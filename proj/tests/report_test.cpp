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

#include "shoreline/report.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "shoreline/certifier.hpp"
#include "shoreline/evaluator.hpp"
#include "shoreline/lemmas.hpp"

namespace shoreline {
namespace {

using nlohmann::json;

CRReport SmallRayReport(const Fleet& fleet) {
  EvalOptions o;
  o.horizon = 2.0;
  o.theta_steps = 16;
  return evaluate_cr(fleet, o);
}

TEST(EmitReportTest, ByteIdenticalAcrossRuns) {
  const Fleet fleet = ray_fleet(4);
  const Provenance prov{"library", std::nullopt};
  const std::string a = emit_report(SmallRayReport(fleet), fleet, prov);
  const std::string b = emit_report(SmallRayReport(fleet), fleet, prov);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.back(), '\n');
  const json doc = json::parse(a);
  EXPECT_EQ(doc.at("schema"), kCrReportSchema);
  EXPECT_NEAR(doc.at("cr_estimate").get<double>(), std::sqrt(2.0), 1e-9);
  EXPECT_EQ(doc.at("fleet").size(), 4u);
  EXPECT_TRUE(doc.at("provenance").at("seed").is_null());
}

TEST(EmitReportTest, KeysAreSorted) {
  const Fleet fleet = ray_fleet(3);
  const json doc = json::parse(emit_report(SmallRayReport(fleet), fleet, Provenance{"x", 1}));
  std::string prev;
  for (const auto& [key, value] : doc.items()) {
    EXPECT_LT(prev, key);
    prev = key;
  }
}

TEST(EmitReportTest, UnboundedCertificateWritesNull) {
  const TrajectorySpec idle(Polyline({{0.0, 0.0}}));
  const Fleet fleet({idle, idle, idle});
  const json doc = to_json(snapshot_lower_bound(fleet, 1.0, 3), fleet, Provenance{"x", 7});
  EXPECT_EQ(doc.at("schema"), kCertificateSchema);
  EXPECT_TRUE(doc.at("bound").is_null());
  EXPECT_TRUE(doc.at("unbounded").get<bool>());
  EXPECT_TRUE(doc.at("degenerate").get<bool>());
  EXPECT_EQ(doc.at("provenance").at("seed"), 7);
}

TEST(EmitReportTest, LemmaSummaryCarriesEveryCheck) {
  LemmaSuiteOptions o;
  o.suite = LemmaSuite::kDiscriminant;
  o.grid = 50;
  const LemmaSummary s = run_lemma_suite(o);
  const json doc = to_json(s, Provenance{"library", o.seed});
  EXPECT_EQ(doc.at("schema"), kLemmaSchema);
  EXPECT_EQ(doc.at("checks").size(), s.checks.size());
}

TEST(RenderSvgTest, EmptyCanvas) {
  const std::string svg = render_svg(RenderSpec{});
  EXPECT_EQ(svg,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
            "viewBox=\"0 0 800 800\">\n"
            "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n"
            "</svg>\n");
}

TEST(RenderSvgTest, LineAndRayScene) {
  RenderSpec s;
  s.width = s.height = 100;
  s.world_radius = 2.0;
  s.layers.push_back(LineLayer{"shore", Line(0.0, 1.0), {}});
  s.layers.push_back(TrajectoryLayer{"ray", TrajectorySpec(Ray{0.0}), 1.0, {}});
  const std::string svg = render_svg(s);
  // x = 1 maps to pixel 75; the line is clipped to the canvas edges.
  EXPECT_NE(svg.find("<g id=\"shore\"><polyline points=\"75.000,100.000 75.000,0.000\""),
            std::string::npos);
  // The ray starts at the canvas centre and ends at x = 1.
  EXPECT_NE(svg.find("<g id=\"ray\"><polyline points=\"50.000,50.000 "), std::string::npos);
  EXPECT_NE(svg.find(" 75.000,50.000\""), std::string::npos);
  EXPECT_EQ(svg, render_svg(s));
}

TEST(RenderSvgTest, LineMissingTheCanvasDrawsNothing) {
  RenderSpec s;
  s.world_radius = 1.0;
  s.layers.push_back(LineLayer{"far", Line(0.3, 5.0), {}});
  EXPECT_EQ(render_svg(s).find("<polyline"), std::string::npos);
}

TEST(EllipseOutlineTest, SamplesLieOnTheBoundary) {
  const EllipseRegion e(0.7, 2.0);
  for (const Point2& p : ellipse_outline(e, 1.0, 512)) {
    EXPECT_LE(std::abs(ellipse_q(p.x, p.y, e)), 1e-6);
  }
  for (const Point2& p : ellipse_outline(e, 3.0, 64)) {
    EXPECT_LE(std::abs(ellipse_q(p.x / 3.0, p.y / 3.0, e)), 1e-6);
  }
}

// Pixel coordinates of the two-robot figure map back onto both ellipses up
// to the 3-decimal rounding of the output.
TEST(TwoRobotSceneTest, RenderedEllipsesMatchTheRegions) {
  const Point2 r1{0.6, 0.0}, r2{-0.2, 0.5};
  RenderSpec scene = two_robot_scene(r1, r2, 0.05);
  ASSERT_EQ(scene.layers.size(), 6u);
  const std::string svg = render_svg(scene);
  const double px = scene.width / (2.0 * scene.world_radius);
  for (const auto& [id, robot] : {std::pair{"ellipse-robot-1", r1}, std::pair{"ellipse-robot-2", r2}}) {
    const EllipseRegion e(robot.norm(), std::atan2(robot.y, robot.x));
    const auto start = svg.find(std::string("<g id=\"") + id + "\">");
    ASSERT_NE(start, std::string::npos);
    const auto from = svg.find("points=\"", start) + 8;
    std::istringstream pts(svg.substr(from, svg.find('"', from) - from));
    std::string pair;
    int count = 0;
    while (pts >> pair) {
      const auto comma = pair.find(',');
      const double x = (std::stod(pair.substr(0, comma)) - scene.width / 2.0) / px;
      const double y = (scene.height / 2.0 - std::stod(pair.substr(comma + 1))) / px;
      EXPECT_LE(std::abs(ellipse_q(x, y, e)), 2e-2) << id;
      ++count;
    }
    EXPECT_GE(count, 512);
  }
  EXPECT_NE(svg.find("<g id=\"witness\">"), std::string::npos);
}

TEST(TwoRobotSceneTest, RejectsRobotBelowAxis) {
  EXPECT_THROW(two_robot_scene({0.5, 0.0}, {0.1, -0.3}, 0.01), std::invalid_argument);
}

TEST(SceneForReportTest, CrReportAndCertificate) {
  const Fleet fleet = ray_fleet(5);
  const Provenance prov{"library", std::nullopt};
  const RenderSpec cr = scene_for_report(to_json(SmallRayReport(fleet), fleet, prov), std::nullopt);
  EXPECT_EQ(cr.layers.size(), 6u);  // five robots and the witness line
  const RenderSpec cert =
      scene_for_report(to_json(snapshot_lower_bound(fleet, 1.0, 5), fleet, prov), 3.0);
  EXPECT_DOUBLE_EQ(cert.world_radius, 3.0);
  EXPECT_EQ(render_svg(cert).find("<g id=\"cone\">") != std::string::npos, true);

  const Fleet pair({TrajectorySpec(Ray{0.3}), TrajectorySpec(Ray{4.0})});
  const RenderSpec two = scene_for_report(to_json(snapshot_lower_bound(pair, 2.0, 2), pair, prov),
                                          std::nullopt);
  EXPECT_EQ(std::get<EllipseLayer>(two.layers[0]).id, "ellipse-robot-1");
}

TEST(SceneForReportTest, UnknownSchemaThrows) {
  EXPECT_THROW(scene_for_report(json{{"schema", "other/1"}}, std::nullopt), std::invalid_argument);
  EXPECT_THROW(scene_for_report(json::array(), std::nullopt), std::invalid_argument);
}

}  // namespace
}  // namespace shoreline
