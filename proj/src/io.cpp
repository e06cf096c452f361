#include "radarbelt/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"

namespace radarbelt::io {

using nlohmann::json;

namespace {

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
}

double number(const json& j, const char* field) {
  if (!j.contains(field)) throw ConfigError(std::string("missing field '") + field + "'");
  const auto& v = j.at(field);
  if (!v.is_number()) throw ConfigError(std::string("field '") + field + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError(std::string("field '") + field + "' must be finite");
  return d;
}

std::optional<double> optional_number(const json& j, const char* field) {
  if (!j.contains(field) || j.at(field).is_null()) return std::nullopt;
  return number(j, field);
}

std::optional<std::string> optional_string(const json& j, const char* field) {
  if (!j.contains(field) || j.at(field).is_null()) return std::nullopt;
  if (!j.at(field).is_string()) throw ConfigError(std::string("field '") + field + "' must be a string");
  return j.at(field).get<std::string>();
}

RadarParams parse_radar(const json& j) {
  try {
    if (j.contains("zeta_max")) return RadarParams::from_zeta(number(j, "zeta_max"));
    if (j.contains("k_const") || j.contains("gamma"))
      return RadarParams::from_snr(number(j, "k_const"), number(j, "gamma"));
  } catch (const DomainError& e) {
    throw ConfigError(std::string("radar parameters: ") + e.what());
  }
  throw ConfigError("missing field 'zeta_max' (or 'k_const' and 'gamma')");
}

std::optional<double> parse_mu(const json& j, std::vector<std::string>* warnings) {
  auto mu = optional_number(j, "mu");
  if (mu && warnings) warnings->push_back("'mu' is not used by any formula; carried as metadata only");
  return mu;
}

// Either an explicit array or {"from", "to", "step"} (inclusive, tolerant to rounding).
std::vector<double> parse_range(const json& j, const char* field) {
  if (!j.contains(field)) throw ConfigError(std::string("missing field '") + field + "'");
  const auto& v = j.at(field);
  std::vector<double> out;
  if (v.is_array()) {
    for (const auto& e : v) {
      if (!e.is_number()) throw ConfigError(std::string("field '") + field + "' must hold numbers");
      out.push_back(e.get<double>());
    }
  } else if (v.is_object()) {
    const double from = number(v, "from");
    const double to = number(v, "to");
    const double step = number(v, "step");
    if (step <= 0.0) throw ConfigError(std::string("field '") + field + ".step' must be > 0");
    const long n = static_cast<long>(std::floor((to - from) / step + 1e-9));
    for (long i = 0; i <= n; ++i) out.push_back(round12(from + i * step));
  } else {
    throw ConfigError(std::string("field '") + field + "' must be an array or {from,to,step}");
  }
  if (out.empty()) throw ConfigError(std::string("field '") + field + "' is empty");
  return out;
}

json params_json(const RadarParams& p) {
  json j;
  j["zeta_max"] = round12(p.zeta_max());
  if (p.k_const()) j["k_const"] = round12(*p.k_const());
  if (p.gamma()) j["gamma"] = round12(*p.gamma());
  return j;
}

json interval_json(const Interval& iv) { return json::array({round12(iv.lo), round12(iv.hi)}); }

json report_json(const CoverageReport& report) {
  json j;
  j["covered"] = report.covered;
  j["uncovered"] = json::array();
  for (const auto& g : report.uncovered_intervals) j["uncovered"].push_back(interval_json(g));
  j["witnesses"] = json::array();
  for (const auto& w : report.witness_map)
    j["witnesses"].push_back({{"tx", w.tx_index}, {"rx", w.rx_index}, {"span", interval_json(w.span)}});
  j["max_product_slack"] = std::isfinite(report.max_product_slack) ? json(round12(report.max_product_slack)) : json();
  return j;
}

}  // namespace

double round12(double v) {
  if (!std::isfinite(v) || v == 0.0) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string format12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << content;
}

InstanceConfig parse_instance_config(const std::string& text, std::vector<std::string>* warnings) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ConfigError("line 1: config must be a JSON object");
  InstanceConfig c;
  c.params = parse_radar(j);
  c.length_l = number(j, "L");
  c.width_w = number(j, "W");
  c.cost_tx = optional_number(j, "cost_tx").value_or(1.0);
  c.cost_rx = optional_number(j, "cost_rx").value_or(1.0);
  c.grid_step = optional_number(j, "grid_step");
  c.mu = parse_mu(j, warnings);
  c.out_path = optional_string(j, "out");
  c.svg_path = optional_string(j, "svg");

  if (c.width_w <= 0.0) throw ConfigError("field 'W': width must be > 0");
  if (c.width_w >= 2.0 * c.params.zeta_max()) throw ConfigError("field 'W': width must be < 2*zeta_max");
  if (c.length_l < c.width_w) throw ConfigError("field 'L': length must be >= width");
  if (c.cost_tx <= 0.0) throw ConfigError("field 'cost_tx' must be > 0");
  if (c.cost_rx <= 0.0) throw ConfigError("field 'cost_rx' must be > 0");
  if (c.grid_step && *c.grid_step <= 0.0) throw ConfigError("field 'grid_step' must be > 0");
  if (warnings && c.cost_tx < c.cost_rx)
    warnings->push_back("cost_tx < cost_rx: planning with transmitter/receiver roles swapped");
  return c;
}

SweepConfig parse_sweep_config(const std::string& text, std::vector<std::string>* warnings) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ConfigError("line 1: config must be a JSON object");
  SweepConfig c;
  c.params = parse_radar(j);
  c.widths = parse_range(j, "W");
  c.lengths = parse_range(j, "L");
  c.alphas = parse_range(j, "alpha");
  c.cost_rx = optional_number(j, "cost_rx").value_or(1.0);
  c.grid_step = optional_number(j, "grid_step");
  c.out_path = optional_string(j, "out");
  parse_mu(j, warnings);
  for (double w : c.widths)
    if (w <= 0.0 || w >= 2.0 * c.params.zeta_max())
      throw ConfigError("field 'W': every width must be in (0, 2*zeta_max), got " + format12(w));
  for (double l : c.lengths)
    if (l <= 0.0) throw ConfigError("field 'L': every length must be > 0");
  for (double a : c.alphas)
    if (a <= 0.0) throw ConfigError("field 'alpha': every alpha must be > 0");
  if (c.cost_rx <= 0.0) throw ConfigError("field 'cost_rx' must be > 0");
  return c;
}

std::string plan_to_json(const InstanceConfig& config, const PlanResult& plan, const CoverageReport& report) {
  json j;
  j["params"] = params_json(config.params);
  j["belt"] = {{"L", round12(config.length_l)}, {"W", round12(config.width_w)}};
  j["costs"] = {{"cost_tx", round12(config.cost_tx)}, {"cost_rx", round12(config.cost_rx)}};
  j["regime"] = to_string(plan.placement.regime);
  j["nodes"] = json::array();
  for (const auto& n : plan.placement.nodes) j["nodes"].push_back({{"kind", to_string(n.kind)}, {"x", round12(n.x)}});
  j["counts"] = {{"tx", plan.placement.num_tx}, {"rx", plan.placement.num_rx}};
  j["cost"] = round12(plan.min_value);
  j["verified"] = report.covered;
  const auto& d = plan.diagnostics;
  j["diagnostics"] = {{"phi", round12(d.phi)},
                      {"theta_star", round12(d.theta_star)},
                      {"g_star", round12(d.g_star)},
                      {"remaining_length", round12(d.remaining_length)}};
  if (plan.placement.regime == Regime::Narrow) {
    j["diagnostics"]["grid_step"] = round12(d.grid_step);
    j["diagnostics"]["single_pair_reach"] = round12(d.single_pair_reach);
  }
  j["coverage"] = report_json(report);
  return j.dump(2) + "\n";
}

PlanDocument parse_plan(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ConfigError("line 1: plan must be a JSON object");
  if (!j.contains("params") || !j.contains("belt") || !j.contains("nodes"))
    throw ConfigError("plan needs 'params', 'belt' and 'nodes'");
  PlanDocument doc;
  doc.params = parse_radar(j.at("params"));
  doc.length_l = number(j.at("belt"), "L");
  doc.width_w = number(j.at("belt"), "W");
  if (j.contains("costs"))
    doc.costs = CostModel(number(j.at("costs"), "cost_tx"), number(j.at("costs"), "cost_rx"));
  std::vector<Node> nodes;
  const auto& arr = j.at("nodes");
  if (!arr.is_array()) throw ConfigError("field 'nodes' must be an array");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& n = arr[i];
    const auto kind = optional_string(n, "kind");
    if (!kind || (*kind != "tx" && *kind != "rx"))
      throw ConfigError("nodes[" + std::to_string(i) + "].kind must be \"tx\" or \"rx\"");
    nodes.push_back({*kind == "tx" ? NodeKind::Tx : NodeKind::Rx, number(n, "x")});
  }
  Regime regime = Regime::Wide;
  if (j.contains("regime") && j.at("regime") == "Narrow") regime = Regime::Narrow;
  doc.placement = Placement::make(std::move(nodes), doc.costs.value_or(CostModel::unit()), regime);
  return doc;
}

std::string report_to_json(const CoverageReport& report) { return report_json(report).dump(2) + "\n"; }

std::string csv_header() { return "W,L,alpha,regime,numTx,numRx,cost\r\n"; }

std::string csv_row(const SweepRow& r) {
  return format12(r.width_w) + "," + format12(r.length_l) + "," + format12(r.alpha) + "," +
         to_string(r.regime) + "," + std::to_string(r.num_tx) + "," + std::to_string(r.num_rx) + "," +
         format12(r.cost) + "\r\n";
}

std::vector<std::vector<Point2D>> cassini_boundary(double a, double b, const RadarParams& params, int samples) {
  // Polar form about the centre: r^4 - 2 h^2 r^2 cos(2t) + h^4 - zeta^4 = 0.
  const double centre = 0.5 * (a + b);
  const double h = 0.5 * std::abs(b - a);
  const double h2 = h * h;
  const double c = params.zeta_sq();
  const double pi = std::numbers::pi;
  std::vector<std::vector<Point2D>> curves;

  if (c >= h2) {
    std::vector<Point2D> loop;
    for (int i = 0; i < samples; ++i) {
      const double t = 2.0 * pi * i / samples;
      const double s2 = std::sin(2.0 * t);
      const double r2 = h2 * std::cos(2.0 * t) + std::sqrt(std::max(0.0, c * c - h2 * h2 * s2 * s2));
      const double r = std::sqrt(std::max(0.0, r2));
      loop.push_back({centre + r * std::cos(t), r * std::sin(t)});
    }
    curves.push_back(std::move(loop));
    return curves;
  }

  const double t_max = 0.5 * std::asin(c / h2);
  const int per_branch = std::max(2, samples / 4);
  for (double side : {0.0, pi}) {
    std::vector<Point2D> lobe;
    for (int branch = 0; branch < 2; ++branch) {
      for (int i = 0; i < per_branch; ++i) {
        double u = -t_max + 2.0 * t_max * i / (per_branch - 1);
        if (branch == 1) u = -u;
        const double s2 = std::sin(2.0 * u);
        const double root = std::sqrt(std::max(0.0, c * c - h2 * h2 * s2 * s2));
        const double r2 = h2 * std::cos(2.0 * u) + (branch == 0 ? root : -root);
        const double r = std::sqrt(std::max(0.0, r2));
        lobe.push_back({centre + r * std::cos(u + side), r * std::sin(u + side)});
      }
    }
    curves.push_back(std::move(lobe));
  }
  return curves;
}

std::string render_svg(const Placement& placement, const Belt& belt, const RadarParams& params,
                       const CoverageReport& report) {
  const double z = params.zeta_max();
  const double margin = 2.0 * z;
  const double min_x = -margin;
  const double width = belt.length + 2.0 * margin;
  const double height = 2.0 * (belt.half_width + margin);
  const double glyph = 0.04 * z;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << format12(min_x) << " "
      << format12(-height / 2.0) << " " << format12(width) << " " << format12(height) << "\">\n";
  svg << "<rect class=\"belt\" x=\"0\" y=\"" << format12(-belt.half_width) << "\" width=\"" << format12(belt.length)
      << "\" height=\"" << format12(2.0 * belt.half_width)
      << "\" fill=\"#fff3b0\" stroke=\"#b08900\" stroke-width=\"" << format12(glyph / 2) << "\"/>\n";
  svg << "<line x1=\"" << format12(min_x) << "\" y1=\"0\" x2=\"" << format12(min_x + width)
      << "\" y2=\"0\" stroke=\"#999\" stroke-width=\"" << format12(glyph / 4) << "\"/>\n";

  std::set<std::pair<int, int>> drawn;
  for (const auto& w : report.witness_map) {
    if (!drawn.insert({w.tx_index, w.rx_index}).second) continue;
    const double a = placement.nodes.at(w.tx_index).x;
    const double b = placement.nodes.at(w.rx_index).x;
    svg << "<path class=\"oval\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"" << format12(glyph / 3)
        << "\" d=\"";
    for (const auto& curve : cassini_boundary(a, b, params, 720)) {
      for (std::size_t i = 0; i < curve.size(); ++i)
        svg << (i == 0 ? "M" : "L") << format12(curve[i].x) << "," << format12(-curve[i].y) << " ";
      svg << "Z ";
    }
    svg << "\"/>\n";
  }

  for (const auto& n : placement.nodes) {
    const bool tx = n.kind == NodeKind::Tx;
    svg << "<circle class=\"node " << to_string(n.kind) << "\" cx=\"" << format12(n.x) << "\" cy=\"0\" r=\""
        << format12(glyph) << "\" fill=\"" << (tx ? "#000" : "#fff") << "\" stroke=\"#000\" stroke-width=\""
        << format12(glyph / 3) << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace radarbelt::io
