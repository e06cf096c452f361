#pragma once

// Independent coverage certification and a brute-force optimality oracle.

#include <cstdint>
#include <vector>

#include "radarbelt/planner.hpp"

namespace radarbelt {

struct Witness {
  Interval span;  // maximal covered interval on the belt's top edge
  int tx_index = -1;  // indices into Placement::nodes
  int rx_index = -1;
};

struct CoverageReport {
  bool covered = false;
  std::vector<Interval> uncovered_intervals;  // sorted, disjoint, inside [0, length]
  std::vector<Witness> witness_map;
  /// min over sampled x in [0, length] of zeta^4 - best pair product^2 (negative where uncovered).
  double max_product_slack = 0.0;

  double uncovered_length() const;
};

/// Gaps no longer than this (relative to zeta_max) are treated as touching intervals.
inline constexpr double kGapTolerance = 1e-9;

/// Exact check on the top edge y = half_width; monotonicity of the distance product in |y|
/// extends it to the whole strip.
CoverageReport verify(const Placement& placement, const Belt& belt, const RadarParams& params);

/// 2-D sampling of [0, length] x [-half_width, half_width]. A column is uncovered if any of its
/// samples is. Rejects grids above 1e8 samples with DomainError.
CoverageReport verify_grid(const Placement& placement, const Belt& belt, const RadarParams& params,
                           double grid_step);

/// True when the two reports agree up to gaps narrower than 2 * grid_step.
bool reports_agree(const CoverageReport& exact, const CoverageReport& grid, double grid_step);

struct OracleResult {
  double best_cost = 0.0;
  Placement best_placement;
  std::uint64_t instances_searched = 0;
};

/// Exhaustive search over count pairs in ascending cost and node positions on the grid
/// {0, step, 2 step, ..., length}. Requires max_nodes <= 8.
/// Throws InfeasibleError if nothing with at most max_nodes nodes covers the belt.
OracleResult brute_force_min_cost(const Belt& belt, const CostModel& costs, const RadarParams& params,
                                  int max_nodes, double position_step);

}  // namespace radarbelt
