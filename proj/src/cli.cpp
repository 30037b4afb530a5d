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

#include "shoreline/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "shoreline/certifier.hpp"
#include "shoreline/config.hpp"
#include "shoreline/evaluator.hpp"
#include "shoreline/lemmas.hpp"
#include "shoreline/optimizer.hpp"
#include "shoreline/report.hpp"

namespace shoreline {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
  if (!f) throw UsageError("failed writing '" + path + "'");
}

std::string fixed(double v, int digits = 6) {
  if (!std::isfinite(v)) return "inf";
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

struct EvaluateArgs {
  std::string config;
  std::string out = "cr_report.json";
  std::optional<double> horizon, epsilon, window_lo, window_hi;
  std::optional<int> theta_steps, t_steps;
  bool profiles = false;
};

int cmd_evaluate(const EvaluateArgs& a, std::ostream& out, std::ostream& err) {
  const FleetConfig cfg = load_fleet_config(a.config);
  EvalOptions opt = resolve_eval_options(cfg);
  if (a.horizon) opt.horizon = *a.horizon;
  if (a.epsilon) opt.epsilon = a.epsilon;
  if (a.theta_steps) opt.theta_steps = *a.theta_steps;
  if (a.t_steps) opt.t_steps = *a.t_steps;
  if (a.window_lo || a.window_hi) {
    if (!a.window_lo || !a.window_hi) throw UsageError("--window-lo and --window-hi go together");
    opt.window = Window{*a.window_lo, *a.window_hi};
  }
  opt.keep_profiles = a.profiles;
  try {
    const CRReport report = evaluate_cr(cfg.fleet, opt);
    write_file(a.out, emit_report(report, cfg.fleet, Provenance{a.config, std::nullopt}));
    out << "cr_estimate=" << fixed(report.cr_estimate) << " witness(theta=" << fixed(report.witness.theta())
        << ", delta=" << fixed(report.witness.delta()) << ") time=" << fixed(report.witness_time)
        << " coverage=" << fixed(report.coverage_radius) << " -> " << a.out << "\n";
    return kExitOk;
  } catch (const UncoveredDirection& e) {
    err << "error: " << e.what() << "\n";
    return kExitUncovered;
  }
}

struct CertifyArgs {
  std::string config;
  std::string out = "certificate.json";
  int n = 0;
  double d = 1.0;
  SnapshotParams params;
};

int cmd_certify(const CertifyArgs& a, std::ostream& out) {
  const FleetConfig cfg = load_fleet_config(a.config);
  if (cfg.fleet.size() != static_cast<std::size_t>(a.n)) {
    throw UsageError("fleet has " + std::to_string(cfg.fleet.size()) + " robots but --n is " +
                     std::to_string(a.n));
  }
  const ConeCertificate cert = snapshot_lower_bound(cfg.fleet, a.d, a.n, a.params);
  write_file(a.out, emit_report(cert, cfg.fleet, Provenance{a.config, std::nullopt}));
  if (cert.degenerate) {
    out << "degenerate: unbounded CR (all robots at the origin at d=" << fixed(a.d) << ") -> "
        << a.out << "\n";
  } else {
    out << "n=" << a.n << " bound=" << fixed(cert.bound) << " limit=" << fixed(cert.limit_bound)
        << " certified=" << fixed(cert.certified_bound) << " witness(theta="
        << fixed(cert.witness_line.theta()) << ", delta=" << fixed(cert.witness_line.delta())
        << ") -> " << a.out << "\n";
  }
  return kExitOk;
}

struct LemmaArgs {
  LemmaSuiteOptions options;
  std::string suite = "all";
  std::string out = "lemmas.json";
};

int cmd_lemmas(LemmaArgs a, std::ostream& out, std::ostream& err) {
  a.options.suite = parse_lemma_suite(a.suite);
  const LemmaSummary summary = run_lemma_suite(a.options);
  write_file(a.out, emit_report(summary, Provenance{"lemmas", a.options.seed}));
  for (const LemmaCheck& c : summary.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " [" << c.grid << "] extremal="
        << std::setprecision(10) << c.extremal << " " << c.detail
        << (c.negative_control ? " (negative control: violation expected)" : "") << "\n";
  }
  if (!summary.all_passed()) {
    for (const LemmaCheck& c : summary.checks) {
      if (!c.passed) err << "lemma check failed: " << c.name << ": " << c.detail << "\n";
    }
    return kExitLemmaFailed;
  }
  out << "all " << summary.checks.size() << " checks passed -> " << a.out << "\n";
  return kExitOk;
}

struct OptimizeArgs {
  int n = 1;
  SpiralOptimizeParams params;
  std::string out = "optimize.json";
};

int cmd_optimize(const OptimizeArgs& a, std::ostream& out, std::ostream& err) {
  if (a.n != 1 && a.n != 2) {
    throw UsageError("unsupported: n=" + std::to_string(a.n) +
                     " (spiral search is defined for n = 1 or 2; use rays for n >= 3)");
  }
  const OptimizeResult r = optimize_spiral(a.n, a.params);
  write_file(a.out, emit_report(r, a.n, a.params, Provenance{"optimize", std::nullopt}));
  out << "n=" << a.n << " CR*=" << fixed(r.value) << " b*=" << fixed(r.parameter)
      << " evaluations=" << r.evaluations << " -> " << a.out << "\n";
  if (!r.converged) {
    err << "error: golden-section search did not converge within " << a.params.max_iter
        << " iterations\n";
    return kExitNotConverged;
  }
  return kExitOk;
}

struct PlotArgs {
  std::string report;
  std::string out = "plot.svg";
  std::optional<double> world_radius;
  int width = defaults::kCanvasPixels;
};

int cmd_plot(const PlotArgs& a, std::ostream& out) {
  std::ifstream in(a.report);
  if (!in) throw UsageError("cannot read report '" + a.report + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(a.report + ": " + e.what());
  }
  RenderSpec scene = scene_for_report(doc, a.world_radius);
  scene.width = scene.height = a.width;
  write_file(a.out, render_svg(scene));
  out << "rendered " << scene.layers.size() << " layers -> " << a.out << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shoreline search: competitive-ratio evaluation and lower-bound certificates",
               "shoreline"};
  app.require_subcommand(1);

  EvaluateArgs ev;
  auto* evaluate = app.add_subcommand("evaluate", "Competitive ratio of a fleet");
  evaluate->add_option("config", ev.config, "Fleet config (JSON)")->required();
  evaluate->add_option("-o,--out", ev.out, "Report path");
  evaluate->add_option("--horizon", ev.horizon, "Time horizon");
  evaluate->add_option("--theta-steps", ev.theta_steps, "Directions");
  evaluate->add_option("--t-steps", ev.t_steps, "Time samples");
  evaluate->add_option("--epsilon", ev.epsilon, "Smallest line distance");
  evaluate->add_option("--window-lo", ev.window_lo, "Measurement window lower end");
  evaluate->add_option("--window-hi", ev.window_hi, "Measurement window upper end");
  evaluate->add_flag("--profiles", ev.profiles, "Store direction profiles in the report");

  CertifyArgs ce;
  auto* certify = app.add_subcommand("certify", "Snapshot lower-bound certificate");
  certify->add_option("config", ce.config, "Fleet config (JSON)")->required();
  certify->add_option("-n,--n", ce.n, "Number of robots")->required();
  certify->add_option("-d,--d", ce.d, "Snapshot time");
  certify->add_option("-o,--out", ce.out, "Certificate path");
  certify->add_option("--gamma", ce.params.gamma, "Small-cone half-angle (n >= 4)");
  certify->add_option("--epsilon", ce.params.epsilon, "Relative witness offset (n >= 3)");
  certify->add_option("--zeta", ce.params.zeta, "Witness offset below y = -1/2 (n = 2)");

  LemmaArgs le;
  auto* lemmas = app.add_subcommand("lemmas", "Numerical lemma verification suite");
  lemmas->add_option("--suite", le.suite, "all | omb | scaling | ellipse | discriminant");
  lemmas->add_option("--grid", le.options.grid, "Grid size per axis");
  lemmas->add_option("--samples", le.options.ellipse_samples, "Ellipse oracle samples");
  lemmas->add_option("--seed", le.options.seed, "Random seed");
  lemmas->add_flag("--negative-control", le.options.omb_negative_control,
                   "Also run the reflection inequality beyond pi/4");
  lemmas->add_option("--omb-phi", le.options.omb_negative_phi, "Angle for the negative control");
  lemmas->add_flag("--zeta-zero", le.options.zeta_zero_diagnostic,
                   "Also sweep the discriminant at zeta = 0");
  lemmas->add_option("-o,--out", le.out, "Summary path");

  OptimizeArgs op;
  auto* optimize = app.add_subcommand("optimize", "Best spiral growth rate for n = 1 or 2");
  optimize->add_option("-n,--n", op.n, "Number of robots")->required();
  optimize->add_option("--lo", op.params.lo, "Bracket lower end");
  optimize->add_option("--hi", op.params.hi, "Bracket upper end");
  optimize->add_option("--tol", op.params.tol, "Tolerance on the growth rate");
  optimize->add_option("--prescan", op.params.prescan, "Pre-scan points");
  optimize->add_option("--max-iter", op.params.max_iter, "Golden-section iteration cap");
  optimize->add_option("--theta-steps", op.params.eval.theta_steps, "Directions");
  optimize->add_option("--t-steps", op.params.eval.t_steps, "Time samples");
  optimize->add_option("-o,--out", op.out, "Result path");

  PlotArgs pl;
  auto* plot = app.add_subcommand("plot", "Render a report as SVG");
  plot->add_option("report", pl.report, "Report path")->required();
  plot->add_option("-o,--out", pl.out, "SVG path");
  plot->add_option("--world-radius", pl.world_radius, "Half-width of the visible square");
  plot->add_option("--width", pl.width, "Canvas size in pixels");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*evaluate) return cmd_evaluate(ev, out, err);
    if (*certify) return cmd_certify(ce, out);
    if (*lemmas) return cmd_lemmas(le, out, err);
    if (*optimize) return cmd_optimize(op, out, err);
    if (*plot) return cmd_plot(pl, out);
  } catch (const UncoveredDirection& e) {
    err << "error: " << e.what() << "\n";
    return kExitUncovered;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace shoreline
