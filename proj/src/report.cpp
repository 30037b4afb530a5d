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

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "shoreline/config.hpp"

namespace shoreline {

using nlohmann::json;

namespace {

// Non-finite values are not representable in the document format.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json line_json(const Line& l) { return {{"theta", l.theta()}, {"delta", l.delta()}}; }

json provenance_json(const Provenance& p) {
  return {{"generator", "shoreline"},
          {"source", p.source},
          {"seed", p.seed ? json(*p.seed) : json(nullptr)}};
}

json window_json(const std::optional<Window>& w) {
  return w ? json::array({w->lo, w->hi}) : json(nullptr);
}

}  // namespace

json to_json(const CRReport& report, const Fleet& fleet, const Provenance& prov) {
  json doc{{"schema", kCrReportSchema},
           {"provenance", provenance_json(prov)},
           {"fleet", fleet_to_json(fleet)},
           {"cr_estimate", report.cr_estimate},
           {"witness", line_json(report.witness)},
           {"witness_time", report.witness_time},
           {"coverage_radius", number(report.coverage_radius)},
           {"grid",
            {{"theta_steps", report.grid.theta_steps},
             {"t_steps", report.grid.t_steps},
             {"horizon", report.grid.horizon},
             {"epsilon", report.grid.epsilon},
             {"t_min", report.grid.t_min},
             {"window", window_json(report.grid.window)}}}};
  if (!report.profiles.empty()) {
    json profiles = json::array();
    for (const DirectionProfile& p : report.profiles) {
      json recs = json::array();
      for (const ProfileRecord& r : p.records) recs.push_back({r.time, r.value, r.onset});
      profiles.push_back({{"theta", p.theta}, {"coverage", p.coverage}, {"records", recs}});
    }
    doc["profiles"] = std::move(profiles);
  }
  return doc;
}

json to_json(const ConeCertificate& cert, const Fleet& fleet, const Provenance& prov) {
  json positions = json::array();
  for (const Point2& p : cert.robot_positions) positions.push_back({p.x, p.y});
  return {{"schema", kCertificateSchema},
          {"provenance", provenance_json(prov)},
          {"fleet", fleet_to_json(fleet)},
          {"n", cert.n},
          {"snapshot_time", cert.snapshot_time},
          {"bound", number(cert.bound)},
          {"limit_bound", number(cert.limit_bound)},
          {"certified_bound", number(cert.certified_bound)},
          {"degenerate", cert.degenerate},
          {"unbounded", !std::isfinite(cert.bound)},
          {"cone", {{"bisector", cert.cone.bisector}, {"half_angle", cert.cone.half_angle}}},
          {"witness", line_json(cert.witness_line)},
          {"params",
           {{"gamma", cert.params.gamma},
            {"epsilon", cert.params.epsilon},
            {"zeta", cert.params.zeta},
            {"origin_tol", cert.params.origin_tol}}},
          {"robot_positions", positions}};
}

json to_json(const OptimizeResult& result, int n, const SpiralOptimizeParams& params,
             const Provenance& prov) {
  return {{"schema", kOptimizeSchema},
          {"provenance", provenance_json(prov)},
          {"n", n},
          {"parameter", result.parameter},
          {"value", result.value},
          {"evaluations", result.evaluations},
          {"bracket", {result.bracket_lo, result.bracket_hi}},
          {"converged", result.converged},
          {"search", {{"lo", params.lo}, {"hi", params.hi}, {"tol", params.tol},
                      {"prescan", params.prescan}}},
          {"evaluation",
           {{"start_radius", params.eval.start_radius},
            {"theta_steps", params.eval.theta_steps},
            {"t_steps", params.eval.t_steps},
            {"min_window_log_span", params.eval.min_window_log_span}}}};
}

json to_json(const LemmaSummary& summary, const Provenance& prov) {
  json checks = json::array();
  for (const LemmaCheck& c : summary.checks) {
    checks.push_back({{"name", c.name},
                      {"grid", c.grid},
                      {"extremal", number(c.extremal)},
                      {"detail", c.detail},
                      {"passed", c.passed},
                      {"negative_control", c.negative_control}});
  }
  return {{"schema", kLemmaSchema},
          {"provenance", provenance_json(prov)},
          {"suite", to_string(summary.options.suite)},
          {"grid", summary.options.grid},
          {"checks", checks},
          {"all_passed", summary.all_passed()}};
}

std::string emit_report(const json& doc) { return doc.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

class Canvas {
 public:
  explicit Canvas(const RenderSpec& s)
      : w_(s.width), h_(s.height), r_(s.world_radius) {}

  std::string xy(Point2 p) const {
    const double cx = (p.x + r_) / (2.0 * r_) * w_;
    const double cy = (r_ - p.y) / (2.0 * r_) * h_;
    return num(cx) + "," + num(cy);
  }
  double scale() const { return w_ / (2.0 * r_); }

 private:
  double w_, h_, r_;
};

std::string style_attrs(const Style& s) {
  std::string out = " stroke=\"" + s.stroke + "\" stroke-width=\"" + num(s.width) +
                    "\" fill=\"" + s.fill + "\"";
  if (!s.dash.empty()) out += " stroke-dasharray=\"" + s.dash + "\"";
  if (s.opacity != 1.0) out += " opacity=\"" + num(s.opacity) + "\"";
  return out;
}

std::string polyline(const Canvas& c, const std::vector<Point2>& pts, const Style& s,
                     bool closed) {
  std::string out = closed ? "<polygon points=\"" : "<polyline points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += c.xy(pts[i]);
  }
  return out + "\"" + style_attrs(s) + "/>";
}

// Segment of the line inside the square [-r, r]^2, if any.
std::optional<std::pair<Point2, Point2>> clip(const Line& l, double r) {
  const Point2 foot = l.foot();
  const Point2 dir{-l.normal().y, l.normal().x};
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  const double p0[2] = {foot.x, foot.y};
  const double d[2] = {dir.x, dir.y};
  for (int k = 0; k < 2; ++k) {
    if (std::abs(d[k]) < 1e-15) {
      if (std::abs(p0[k]) > r) return std::nullopt;
      continue;
    }
    double a = (-r - p0[k]) / d[k];
    double b = (r - p0[k]) / d[k];
    if (a > b) std::swap(a, b);
    lo = std::max(lo, a);
    hi = std::min(hi, b);
  }
  if (lo > hi) return std::nullopt;
  return std::pair{foot + lo * dir, foot + hi * dir};
}

std::vector<Point2> trajectory_samples(const TrajectorySpec& spec, double horizon, int samples) {
  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(samples) + 1);
  pts.push_back(position(spec, 0.0));
  // Log-spaced in time so spirals keep their early turns.
  const double t0 = horizon * 1e-4;
  for (int i = 0; i < samples; ++i) {
    const double t = t0 * std::pow(horizon / t0, static_cast<double>(i) / (samples - 1));
    pts.push_back(position(spec, t));
  }
  return pts;
}

}  // namespace

std::vector<Point2> ellipse_outline(const EllipseRegion& region, double scale, int samples) {
  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    pts.push_back(scale * region.boundary(kTwoPi * i / samples));
  }
  return pts;
}

std::string render_svg(const RenderSpec& scene) {
  if (!(scene.world_radius > 0.0)) throw std::invalid_argument("world radius must be positive");
  if (scene.width <= 0 || scene.height <= 0) throw std::invalid_argument("canvas must be non-empty");
  const Canvas canvas(scene);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << scene.width << "\" height=\""
     << scene.height << "\" viewBox=\"0 0 " << scene.width << ' ' << scene.height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  for (const Layer& layer : scene.layers) {
    std::visit(
        Overloaded{
            [&](const TrajectoryLayer& t) {
              os << "<g id=\"" << t.id << "\">"
                 << polyline(canvas, trajectory_samples(t.spec, t.horizon, scene.curve_samples),
                             t.style, false)
                 << "</g>\n";
            },
            [&](const LineLayer& l) {
              os << "<g id=\"" << l.id << "\">";
              if (const auto seg = clip(l.line, scene.world_radius)) {
                os << polyline(canvas, {seg->first, seg->second}, l.style, false);
              }
              os << "</g>\n";
            },
            [&](const ConeLayer& c) {
              os << "<g id=\"" << c.id << "\">";
              if (c.cone.half_angle >= kPi) {
                os << "<circle cx=\"" << num(scene.width / 2.0) << "\" cy=\""
                   << num(scene.height / 2.0) << "\" r=\"" << num(c.radius * canvas.scale())
                   << "\"" << style_attrs(c.style) << "/>";
              } else {
                std::vector<Point2> wedge{{0.0, 0.0}};
                const int arc = std::max(2, scene.curve_samples / 8);
                for (int i = 0; i <= arc; ++i) {
                  const double a = c.cone.bisector - c.cone.half_angle +
                                   2.0 * c.cone.half_angle * i / arc;
                  wedge.push_back(c.radius * unit_vector(a));
                }
                os << polyline(canvas, wedge, c.style, true);
              }
              os << "</g>\n";
            },
            [&](const EllipseLayer& e) {
              os << "<g id=\"" << e.id << "\">"
                 << polyline(canvas, ellipse_outline(e.region, e.scale, scene.curve_samples),
                             e.style, true)
                 << "</g>\n";
            },
            [&](const PointLayer& p) {
              const std::string at = canvas.xy(p.at);
              const auto comma = at.find(',');
              os << "<g id=\"" << p.id << "\"><circle cx=\"" << at.substr(0, comma)
                 << "\" cy=\"" << at.substr(comma + 1) << "\" r=\"3.000\""
                 << style_attrs(p.style) << "/>";
              if (!p.label.empty()) {
                os << "<text x=\"" << at.substr(0, comma) << "\" y=\"" << at.substr(comma + 1)
                   << "\" dx=\"5\" dy=\"-5\" font-size=\"12\">" << p.label << "</text>";
              }
              os << "</g>\n";
            }},
        layer);
  }
  os << "</svg>\n";
  return os.str();
}

RenderSpec two_robot_scene(Point2 robot1, Point2 robot2, double zeta) {
  if (robot1.y < -kAngleTolerance || robot2.y < -kAngleTolerance) {
    throw std::invalid_argument("two-robot scene expects both robots in the upper half-plane");
  }
  RenderSpec scene;
  scene.world_radius = 1.0;
  const auto region = [](Point2 p) {
    const double theta = p.norm() > 0.0 ? std::atan2(p.y, p.x) : 0.0;
    return EllipseRegion(std::min(p.norm(), 1.0 - 1e-9), std::clamp(theta, 0.0, kPi));
  };
  Style red{"#d62728", 1.5, "", "none", 1.0};
  Style blue{"#1f77b4", 1.5, "", "none", 1.0};
  Style dashed{"#000000", 1.0, "6,4", "none", 1.0};
  scene.layers.push_back(EllipseLayer{"ellipse-robot-1", region(robot1), 1.0, red});
  scene.layers.push_back(EllipseLayer{"ellipse-robot-2", region(robot2), 1.0, blue});
  scene.layers.push_back(LineLayer{"witness", Line(-kPi / 2.0, 0.5 + zeta), dashed});
  Style dot{"#000000", 1.0, "", "#000000", 1.0};
  scene.layers.push_back(PointLayer{"origin", {0.0, 0.0}, "O", dot});
  scene.layers.push_back(PointLayer{"robot-1", robot1, "R1", Style{"#d62728", 1.0, "", "#d62728", 1.0}});
  scene.layers.push_back(PointLayer{"robot-2", robot2, "R2", Style{"#1f77b4", 1.0, "", "#1f77b4", 1.0}});
  return scene;
}

RenderSpec scene_for_report(const json& doc, std::optional<double> world_radius) {
  if (!doc.is_object() || !doc.contains("schema") || !doc.at("schema").is_string()) {
    throw std::invalid_argument("unknown report schema");
  }
  const std::string schema = doc.at("schema").get<std::string>();
  const Style robot_style{"#1f77b4", 1.2, "", "none", 1.0};
  const Style witness_style{"#d62728", 1.5, "6,4", "none", 1.0};

  if (schema == kCrReportSchema) {
    const Fleet fleet = fleet_from_json(doc.at("fleet"));
    const Line witness(doc.at("witness").at("theta").get<double>(),
                       doc.at("witness").at("delta").get<double>());
    const double t_hit = doc.at("witness_time").get<double>();
    RenderSpec scene;
    scene.world_radius = world_radius.value_or(1.5 * std::max(witness.delta(), 1e-9));
    for (std::size_t i = 0; i < fleet.size(); ++i) {
      scene.layers.push_back(TrajectoryLayer{"robot-" + std::to_string(i + 1), fleet.robots[i],
                                             t_hit, robot_style});
    }
    scene.layers.push_back(LineLayer{"witness", witness, witness_style});
    return scene;
  }

  if (schema == kCertificateSchema) {
    const int n = doc.at("n").get<int>();
    const double d = doc.at("snapshot_time").get<double>();
    std::vector<Point2> pos;
    for (const json& p : doc.at("robot_positions")) pos.emplace_back(p[0].get<double>(), p[1].get<double>());
    const Line witness(doc.at("witness").at("theta").get<double>(),
                       doc.at("witness").at("delta").get<double>());
    if (n == 2 && !doc.at("degenerate").get<bool>()) {
      // Normalized frame: robot 1 on the positive x-axis, robot 2 above it, unit time.
      const double alpha = pos[0].norm() > 0.0 ? std::atan2(pos[0].y, pos[0].x) : 0.0;
      Point2 r1 = (1.0 / d) * rotate(pos[0], -alpha);
      Point2 r2 = (1.0 / d) * rotate(pos[1], -alpha);
      if (r2.y < 0.0) r2.y = -r2.y;
      r1.y = 0.0;
      RenderSpec scene = two_robot_scene(r1, r2, doc.at("params").at("zeta").get<double>());
      if (world_radius) scene.world_radius = *world_radius;
      return scene;
    }
    const Fleet fleet = fleet_from_json(doc.at("fleet"));
    RenderSpec scene;
    double extent = witness.delta();
    for (const Point2& p : pos) extent = std::max(extent, p.norm());
    scene.world_radius = world_radius.value_or(1.5 * std::max(extent, 1e-9));
    const Cone cone(doc.at("cone").at("bisector").get<double>(),
                    doc.at("cone").at("half_angle").get<double>());
    scene.layers.push_back(ConeLayer{"cone", cone, scene.world_radius * 2.0,
                                     Style{"#2ca02c", 1.0, "", "#2ca02c", 0.15}});
    for (std::size_t i = 0; i < fleet.size(); ++i) {
      scene.layers.push_back(TrajectoryLayer{"robot-" + std::to_string(i + 1), fleet.robots[i],
                                             d, robot_style});
      scene.layers.push_back(PointLayer{"robot-" + std::to_string(i + 1) + "-snapshot", pos[i],
                                        "R" + std::to_string(i + 1),
                                        Style{"#1f77b4", 1.0, "", "#1f77b4", 1.0}});
    }
    scene.layers.push_back(LineLayer{"witness", witness, witness_style});
    return scene;
  }

  throw std::invalid_argument("unknown report schema '" + schema + "'");
}

}  // namespace shoreline
