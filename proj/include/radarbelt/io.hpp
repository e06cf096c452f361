#pragma once

// Config parsing and artifact writers (JSON plans, CSV sweeps, SVG renderings).

#include <optional>
#include <string>
#include <vector>

#include "radarbelt/planner.hpp"
#include "radarbelt/verifier.hpp"

namespace radarbelt::io {

/// Config or plan file that does not validate. The message names the field or line.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct InstanceConfig {
  RadarParams params = RadarParams::from_zeta(1.0);
  double length_l = 0.0;
  double width_w = 0.0;
  double cost_tx = 1.0;
  double cost_rx = 1.0;
  std::optional<double> grid_step;
  std::optional<double> mu;  // carried for provenance only
  std::optional<std::string> out_path;
  std::optional<std::string> svg_path;

  Belt belt() const { return Belt::from_dimensions(length_l, width_w); }
  CostModel costs() const { return {cost_tx, cost_rx}; }
};

struct SweepConfig {
  RadarParams params = RadarParams::from_zeta(1.0);
  std::vector<double> widths;
  std::vector<double> lengths;
  std::vector<double> alphas;
  double cost_rx = 1.0;
  std::optional<double> grid_step;
  std::optional<std::string> out_path;
};

/// Fixed 12-significant-digit rounding used for every float we write.
double round12(double v);
std::string format12(double v);

InstanceConfig parse_instance_config(const std::string& text, std::vector<std::string>* warnings = nullptr);
SweepConfig parse_sweep_config(const std::string& text, std::vector<std::string>* warnings = nullptr);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Plan document:
/// { "params": {...}, "belt": {"L", "W"}, "costs": {...}, "regime": "Narrow"|"Wide",
///   "nodes": [{"kind": "tx"|"rx", "x": float}], "counts": {"tx", "rx"}, "cost": float,
///   "verified": bool, "diagnostics": {"phi", "theta_star", "g_star", ...}, "coverage": {...} }
std::string plan_to_json(const InstanceConfig& config, const PlanResult& plan, const CoverageReport& report);

struct PlanDocument {
  RadarParams params = RadarParams::from_zeta(1.0);
  double length_l = 0.0;
  double width_w = 0.0;
  std::optional<CostModel> costs;
  Placement placement;
};
PlanDocument parse_plan(const std::string& text);

std::string report_to_json(const CoverageReport& report);

struct SweepRow {
  double width_w;
  double length_l;
  double alpha;
  Regime regime;
  int num_tx;
  int num_rx;
  double cost;
};
std::string csv_header();
std::string csv_row(const SweepRow& row);

/// Belt rectangle, one glyph per node (filled = tx, hollow = rx) and one Cassini boundary per
/// witness pair, each sampled at 720 points.
std::string render_svg(const Placement& placement, const Belt& belt, const RadarParams& params,
                       const CoverageReport& report);

/// Boundary points of the oval d(p, a) d(p, b) = zeta^2 for foci (a, 0), (b, 0); one polyline
/// per closed component. Total sample count is `samples`.
std::vector<std::vector<Point2D>> cassini_boundary(double a, double b, const RadarParams& params, int samples);

}  // namespace radarbelt::io
