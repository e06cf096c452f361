#include "radarbelt/planner.hpp"

#include <algorithm>
#include <cmath>

#include "radarbelt/reach.hpp"

namespace radarbelt {

namespace {

// Snaps values within this relative distance of an integer onto it, so that the mod/ceil
// steps of min_cost_rp do not flip on rounding noise.
constexpr double kIntegerSnap = 1e-9;

double snapped(double v) {
  const double r = std::round(v);
  return std::abs(v - r) <= kIntegerSnap ? r : v;
}

}  // namespace

std::string to_string(NodeKind kind) { return kind == NodeKind::Tx ? "tx" : "rx"; }
std::string to_string(Regime regime) { return regime == Regime::Wide ? "Wide" : "Narrow"; }

Belt Belt::make(double length, double half_width) {
  if (!std::isfinite(length) || length <= 0.0) throw DomainError("belt length must be > 0");
  if (!std::isfinite(half_width) || half_width <= 0.0) throw DomainError("belt width must be > 0");
  return Belt{length, half_width};
}

CostModel::CostModel(double cost_tx, double cost_rx) : tx_(cost_tx), rx_(cost_rx) {
  if (!std::isfinite(cost_tx) || !std::isfinite(cost_rx) || cost_tx <= 0.0 || cost_rx <= 0.0)
    throw DomainError("costs must be > 0");
}

Placement Placement::make(std::vector<Node> nodes, const CostModel& costs, Regime regime) {
  std::stable_sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return a.x < b.x; });
  Placement p;
  p.nodes = std::move(nodes);
  p.regime = regime;
  for (const auto& n : p.nodes) (n.kind == NodeKind::Tx ? p.num_tx : p.num_rx) += 1;
  p.total_cost = costs.of(p.num_tx, p.num_rx);
  return p;
}

Placement Placement::with_roles_swapped(const CostModel& costs) const {
  std::vector<Node> swapped = nodes;
  for (auto& n : swapped) n.kind = n.kind == NodeKind::Tx ? NodeKind::Rx : NodeKind::Tx;
  return make(std::move(swapped), costs, regime);
}

Placement Placement::scaled(double s) const {
  Placement p = *this;
  for (auto& n : p.nodes) n.x *= s;
  return p;
}

bool is_narrow_regime(double omega, const RadarParams& params) {
  return omega <= params.zeta_max() / std::sqrt(3.0);
}

Placement rotated_placement(int num_tx, int num_rx, double omega, const RadarParams& params,
                            const CostModel& costs) {
  if (num_tx < 1) throw DomainError("rotated placement needs at least one transmitter");
  if (num_rx != num_tx && num_rx != num_tx + 1)
    throw DomainError("rotated placement needs num_rx == num_tx or num_tx + 1");
  const double phi = compute_phi(omega, params);
  std::vector<Node> nodes;
  nodes.reserve(num_tx + num_rx);
  for (int i = 0; i < num_tx + num_rx; ++i)
    nodes.push_back({i % 2 == 0 ? NodeKind::Rx : NodeKind::Tx, i * phi});
  return Placement::make(std::move(nodes), costs, Regime::Wide);
}

PlanResult min_cost_rp(double omega, double ell, const CostModel& costs, const RadarParams& params) {
  if (!std::isfinite(ell) || ell <= 0.0) throw DomainError("belt length must be > 0");
  if (!std::isfinite(omega) || omega <= 0.0 || omega >= params.zeta_max() ||
      is_narrow_regime(omega, params))
    throw DomainError("min_cost_rp needs zeta/sqrt(3) < omega < zeta");

  if (costs.alpha() < 1.0) {
    PlanResult r = min_cost_rp(omega, ell, costs.swapped(), params);
    r.placement = r.placement.with_roles_swapped(costs);
    r.min_value = r.placement.total_cost;
    return r;
  }

  const RegimeQuantities q = solve_theta_star(omega, params);
  PlanResult result;
  result.diagnostics.phi = q.phi;
  result.diagnostics.theta_star = q.theta_star;
  result.diagnostics.g_star = q.g_star;

  if (ell <= q.g_star + kIntegerSnap * q.phi) {
    // One pair at distance g(theta') - 2 theta', centred on the belt.
    const double d = std::min(q.pair_distance_star, ell);
    const double mid = 0.5 * ell;
    result.placement = Placement::make({{NodeKind::Rx, std::max(0.0, mid - 0.5 * d)},
                                        {NodeKind::Tx, std::min(ell, mid + 0.5 * d)}},
                                       costs, Regime::Wide);
    result.min_value = result.placement.total_cost;
    return result;
  }

  const double phi = q.phi;
  const double units = snapped(ell / (2.0 * phi));
  int num_tx = static_cast<int>(std::floor(units));
  int num_rx = num_tx + 1;
  double remaining = ell - num_tx * 2.0 * phi;
  if (units == std::floor(units) || remaining <= kIntegerSnap * phi) remaining = 0.0;
  if (remaining > 0.0) {
    num_tx += 1;
    if (std::ceil(snapped(remaining / phi)) == 2.0) num_rx += 1;
  }
  result.diagnostics.remaining_length = remaining;

  Placement p = rotated_placement(num_tx, num_rx, omega, params, costs);
  for (auto& n : p.nodes) n.x = std::min(n.x, ell);
  result.placement = std::move(p);
  result.min_value = result.placement.total_cost;
  return result;
}

PlanResult opt_mclp(double omega, double ell, const CostModel& costs, const RadarParams& params) {
  if (!std::isfinite(omega) || omega <= 0.0) throw DomainError("belt width must be > 0");
  if (omega >= params.zeta_max()) throw DomainError("width must be < 2*zeta_max");
  if (!std::isfinite(ell) || ell < 2.0 * omega) throw DomainError("belt length must be >= width");
  if (is_narrow_regime(omega, params)) return plan_narrow(omega, ell, costs, params);
  return min_cost_rp(omega, ell, costs, params);
}

}  // namespace radarbelt
