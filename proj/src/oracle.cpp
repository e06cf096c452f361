#include <algorithm>
#include <cmath>
#include <optional>
#include <tuple>

#include "radarbelt/verifier.hpp"

namespace radarbelt {

namespace {

// Depth-first search for a covering placement with exactly num_tx transmitters and num_rx
// receivers on the position grid. Nodes are placed left to right (ties: tx before rx).
//
// Pruning uses one fact about the model: a point (x, omega) covered by (t, r) has
// d(x,t), d(x,r) >= omega and d(x,t) * d(x,r) <= zeta^2, so both foci lie within
// reach = sqrt(zeta^4/omega^2 - omega^2) of x horizontally.
class CountSearch {
public:
  CountSearch(const Belt& belt, const RadarParams& params, std::vector<double> grid)
      : belt_(belt), params_(params), grid_(std::move(grid)) {
    const double z2 = params.zeta_sq();
    const double w = belt.half_width;
    reach_ = std::sqrt(std::max(0.0, (z2 - w * w) * (z2 + w * w))) / w;
    tol_ = kGapTolerance * params.zeta_max();
  }

  std::optional<std::vector<Node>> run(int num_tx, int num_rx) {
    remaining_[0] = num_tx;
    remaining_[1] = num_rx;
    nodes_.clear();
    intervals_.clear();
    if (descend(0, 0)) return nodes_;
    return std::nullopt;
  }

  std::uint64_t visited() const { return visited_; }

private:
  static int slot(NodeKind k) { return k == NodeKind::Tx ? 0 : 1; }

  // End of the covered prefix starting at 0 (0 when point 0 is not covered yet).
  double frontier() const {
    std::vector<Interval> iv = intervals_;
    std::sort(iv.begin(), iv.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    double f = 0.0;
    for (const auto& i : iv) {
      if (i.lo > f + tol_) break;
      f = std::max(f, i.hi);
    }
    return f;
  }

  // End of the prefix of [0, length] lying within reach of some node of kind k (0 if none).
  double kind_frontier(int k) const {
    double f = 0.0;
    for (const auto& n : nodes_) {
      if (slot(n.kind) != k) continue;
      if (n.x - reach_ > f + tol_) break;
      f = std::max(f, n.x + reach_);
    }
    return f;
  }

  bool descend(std::size_t start_idx, int min_kind_at_start) {
    ++visited_;
    const double cover = frontier();
    if (remaining_[0] == 0 && remaining_[1] == 0) return cover >= belt_.length - tol_;

    double kind_front[2];
    for (int k = 0; k < 2; ++k) {
      kind_front[k] = kind_frontier(k);
      if (kind_front[k] + 2.0 * reach_ * remaining_[k] < belt_.length - tol_) return false;
    }

    // The first uncovered point right of the prefix needs two foci within reach of it.
    const double limit = cover + reach_ + tol_;
    for (std::size_t idx = start_idx; idx < grid_.size() && grid_[idx] <= limit; ++idx) {
      const double q = grid_[idx];
      // Later nodes sit at >= q, so every point left of q - reach must already be within
      // reach of a node of each kind that is still to be placed (and of the kind placed now).
      for (int k = (idx == start_idx ? min_kind_at_start : 0); k < 2; ++k) {
        if (remaining_[k] == 0) continue;
        const int other = 1 - k;
        if (kind_front[k] < q - reach_ - tol_) continue;
        if (remaining_[other] > 0 && kind_front[other] < q - reach_ - tol_) continue;

        const NodeKind kind = k == 0 ? NodeKind::Tx : NodeKind::Rx;
        const std::size_t mark = intervals_.size();
        for (const auto& n : nodes_) {
          if (slot(n.kind) == k) continue;
          for (const auto& iv : covered_interval_at_height(q, n.x, belt_.half_width, params_))
            intervals_.push_back(iv);
        }
        nodes_.push_back({kind, q});
        --remaining_[k];
        if (descend(idx, k + 1 < 2 ? k + 1 : 2)) return true;
        ++remaining_[k];
        nodes_.pop_back();
        intervals_.resize(mark);
      }
    }
    return false;
  }

  Belt belt_;
  RadarParams params_;
  std::vector<double> grid_;
  double reach_ = 0.0;
  double tol_ = 0.0;
  int remaining_[2] = {0, 0};
  std::vector<Node> nodes_;
  std::vector<Interval> intervals_;
  std::uint64_t visited_ = 0;
};

}  // namespace

OracleResult brute_force_min_cost(const Belt& belt, const CostModel& costs, const RadarParams& params,
                                  int max_nodes, double position_step) {
  if (max_nodes < 2 || max_nodes > 8) throw DomainError("max_nodes must be in [2, 8]");
  if (!(position_step > 0.0) || !std::isfinite(position_step))
    throw DomainError("position step must be > 0");
  if (belt.half_width >= params.zeta_max()) throw DomainError("width must be < 2*zeta_max");

  std::vector<double> grid;
  const long steps = static_cast<long>(std::floor(belt.length / position_step));
  for (long i = 0; i <= steps; ++i) grid.push_back(i * position_step);
  if (belt.length - grid.back() > 1e-12 * belt.length) grid.push_back(belt.length);

  std::vector<std::tuple<double, int, int>> counts;
  for (int m = 1; m < max_nodes; ++m)
    for (int n = 1; m + n <= max_nodes; ++n) counts.emplace_back(costs.of(m, n), m, n);
  std::sort(counts.begin(), counts.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    if (std::get<1>(a) + std::get<2>(a) != std::get<1>(b) + std::get<2>(b))
      return std::get<1>(a) + std::get<2>(a) < std::get<1>(b) + std::get<2>(b);
    return std::get<1>(a) < std::get<1>(b);
  });

  CountSearch search(belt, params, std::move(grid));
  for (const auto& [cost, m, n] : counts) {
    if (auto nodes = search.run(m, n)) {
      OracleResult r;
      r.best_placement = Placement::make(std::move(*nodes), costs,
                                         is_narrow_regime(belt.half_width, params) ? Regime::Narrow : Regime::Wide);
      r.best_cost = r.best_placement.total_cost;
      r.instances_searched = search.visited();
      return r;
    }
  }
  throw InfeasibleError("brute_force_min_cost: no placement with at most " + std::to_string(max_nodes) +
                        " nodes covers the belt");
}

}  // namespace radarbelt
