#pragma once

// Minimum-cost linear placement of transmitters and receivers on the mid-line of a belt.
//
//   wide regime   zeta/sqrt(3) < omega < zeta : min_cost_rp over rotated placements
//   narrow regime omega <= zeta/sqrt(3)       : cluster search over a discretised line

#include <optional>
#include <string>
#include <vector>

#include "radarbelt/cassini.hpp"

namespace radarbelt {

enum class NodeKind { Tx, Rx };
enum class Regime { Narrow, Wide };

std::string to_string(NodeKind kind);
std::string to_string(Regime regime);

struct Node {
  NodeKind kind = NodeKind::Tx;
  double x = 0.0;
};

/// Rectangle [0, length] x [-half_width, half_width].
struct Belt {
  double length = 0.0;
  double half_width = 0.0;

  static Belt make(double length, double half_width);
  /// L x W as stated in configs; omega = W / 2.
  static Belt from_dimensions(double length_l, double width_w) { return make(length_l, 0.5 * width_w); }
};

class CostModel {
public:
  CostModel(double cost_tx, double cost_rx);
  static CostModel unit() { return {1.0, 1.0}; }

  double cost_tx() const { return tx_; }
  double cost_rx() const { return rx_; }
  double alpha() const { return tx_ / rx_; }
  CostModel swapped() const { return {rx_, tx_}; }
  double of(int num_tx, int num_rx) const { return num_tx * tx_ + num_rx * rx_; }

private:
  double tx_;
  double rx_;
};

struct Placement {
  std::vector<Node> nodes;  // sorted by x
  double total_cost = 0.0;
  Regime regime = Regime::Wide;
  int num_tx = 0;
  int num_rx = 0;

  /// Sorts the nodes (stable) and fills counts and cost.
  static Placement make(std::vector<Node> nodes, const CostModel& costs, Regime regime);
  Placement with_roles_swapped(const CostModel& costs) const;
  Placement scaled(double s) const;
};

struct PlanDiagnostics {
  double phi = 0.0;
  double theta_star = 0.0;
  double g_star = 0.0;
  double remaining_length = 0.0;
  double grid_step = 0.0;          // narrow planner only
  double single_pair_reach = 0.0;  // narrow planner only
};

struct PlanResult {
  Placement placement;
  double min_value = 0.0;
  PlanDiagnostics diagnostics;
};

bool is_narrow_regime(double omega, const RadarParams& params);

/// I^m_n: receivers and transmitters alternate starting with a receiver at 0, spacing phi.
/// Requires m >= 1 and n in {m, m + 1}.
Placement rotated_placement(int num_tx, int num_rx, double omega, const RadarParams& params,
                            const CostModel& costs = CostModel::unit());

/// Wide-regime planner. Nodes that would land past the belt end are clamped to x = length.
PlanResult min_cost_rp(double omega, double ell, const CostModel& costs, const RadarParams& params);

struct NarrowPlannerOptions {
  /// Receiver grid step; 0 means single-pair reach / 512.
  double grid_step = 0.0;
  /// Number of hub offsets tried within one single-pair reach of the frontier (each side).
  int near_hub_offsets = 48;
};

/// Narrow-regime stand-in planner. Builds the line out of clusters: one transmitter (hub)
/// plus receivers that pair with it, where the right-most receiver of a cluster is also
/// paired with the next hub. Accepts any 0 < omega < zeta_max.
/// Throws InfeasibleError if no cluster sequence covers the belt.
PlanResult plan_narrow(double omega, double ell, const CostModel& costs, const RadarParams& params,
                       const NarrowPlannerOptions& options = {});

/// Dispatches on omega <= zeta/sqrt(3). Requires 0 < omega < zeta and ell >= 2 omega.
PlanResult opt_mclp(double omega, double ell, const CostModel& costs, const RadarParams& params);

}  // namespace radarbelt
