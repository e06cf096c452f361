#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>

#include "radarbelt/planner.hpp"
#include "radarbelt/reach.hpp"

namespace radarbelt {

namespace {

// A covered stretch of y = omega produced by pairing a hub at 0 with a receiver at offset x.
struct Item {
  double lo;
  double hi;
  double x;
};

// Items sorted by lo with a running argmax of hi, so "best extension from frontier f" is a
// binary search.
class ItemTable {
public:
  ItemTable(double omega, double step, double max_offset, const RadarParams& params) {
    const long k_max = static_cast<long>(std::ceil(max_offset / step));
    for (long k = -k_max; k <= k_max; ++k) {
      const double x = k * step;
      for (const auto& iv : covered_interval_at_height(0.0, x, omega, params))
        items_.push_back({iv.lo, iv.hi, x});
    }
    std::sort(items_.begin(), items_.end(), [](const Item& a, const Item& b) {
      return a.lo < b.lo || (a.lo == b.lo && a.x < b.x);
    });
    best_.resize(items_.size());
    for (std::size_t i = 0; i < items_.size(); ++i) {
      best_[i] = i;
      if (i > 0 && items_[best_[i - 1]].hi >= items_[i].hi) best_[i] = best_[i - 1];
    }
  }

  // Receiver offset that extends the covered prefix ending at f (relative to the hub) the
  // furthest, restricted to receivers landing in [x_min, x_max].
  std::optional<Item> extend(double f, double tol, double x_min, double x_max) const {
    const auto it = std::upper_bound(items_.begin(), items_.end(), f + tol,
                                     [](double v, const Item& item) { return v < item.lo; });
    if (it == items_.begin()) return std::nullopt;
    const std::size_t last = static_cast<std::size_t>(it - items_.begin()) - 1;
    const Item& top = items_[best_[last]];
    if (top.hi <= f + tol) return std::nullopt;
    if (top.x >= x_min && top.x <= x_max) return top;

    std::optional<Item> pick;
    for (std::size_t i = 0; i <= last; ++i) {
      const Item& c = items_[i];
      if (c.x < x_min || c.x > x_max || c.hi <= f + tol) continue;
      if (!pick || c.hi > pick->hi) pick = c;
    }
    return pick;
  }

private:
  std::vector<Item> items_;
  std::vector<std::size_t> best_;
};

struct Label {
  int num_tx = 0;
  int num_rx = 0;
  double frontier = 0.0;
  std::optional<double> shared_rx;
  int parent = -1;
  double hub = 0.0;
  std::vector<double> receivers;
};

bool better(const Label& a, const Label& b) {
  if (a.frontier != b.frontier) return a.frontier > b.frontier;
  return a.shared_rx.value_or(-INFINITY) > b.shared_rx.value_or(-INFINITY);
}

}  // namespace

PlanResult plan_narrow(double omega, double ell, const CostModel& costs, const RadarParams& params,
                       const NarrowPlannerOptions& options) {
  if (!std::isfinite(ell) || ell <= 0.0) throw DomainError("belt length must be > 0");
  if (!std::isfinite(omega) || omega <= 0.0 || omega >= params.zeta_max())
    throw DomainError("plan_narrow needs 0 < omega < zeta");

  if (costs.alpha() < 1.0) {
    PlanResult r = plan_narrow(omega, ell, costs.swapped(), params, options);
    r.placement = r.placement.with_roles_swapped(costs);
    r.min_value = r.placement.total_cost;
    return r;
  }

  const RegimeQuantities q = solve_theta_star(omega, params);
  const SinglePairReach reach = max_single_pair_reach(omega, params);
  const double step = options.grid_step > 0.0 ? options.grid_step : reach.length / 512.0;
  const double tol = 1e-10 * params.zeta_max();
  // Pairs further apart than zeta^2/omega cover nothing at height omega.
  const ItemTable table(omega, step, params.zeta_sq() / omega, params);

  std::vector<double> hub_offsets;
  const int near = std::max(1, options.near_hub_offsets);
  for (int i = -near; i <= near; ++i) hub_offsets.push_back(reach.length * i / near);
  for (double o = reach.length * 1.15; o <= q.phi; o *= 1.15) hub_offsets.push_back(o);

  PlanResult result;
  result.diagnostics.phi = q.phi;
  result.diagnostics.theta_star = q.theta_star;
  result.diagnostics.g_star = q.g_star;
  result.diagnostics.grid_step = step;
  result.diagnostics.single_pair_reach = reach.length;

  std::vector<Label> arena;
  arena.push_back(Label{});
  std::vector<int> layer{0};
  std::optional<int> best_terminal;
  auto cost_of = [&](const Label& l) { return costs.of(l.num_tx, l.num_rx); };

  while (!layer.empty()) {
    int min_rx = std::numeric_limits<int>::max();
    for (int id : layer) min_rx = std::min(min_rx, arena[id].num_rx);
    const double bound = costs.of(arena[layer.front()].num_tx + 1, std::max(1, min_rx));
    if (best_terminal && bound >= cost_of(arena[*best_terminal])) break;

    std::map<int, Label> next;  // by num_rx
    auto offer = [&](Label&& cand) {
      if (cand.frontier >= ell - tol) {
        cand.frontier = ell;
        if (!best_terminal || cost_of(cand) < cost_of(arena[*best_terminal])) {
          arena.push_back(std::move(cand));
          best_terminal = static_cast<int>(arena.size()) - 1;
        }
        return;
      }
      auto it = next.find(cand.num_rx);
      if (it == next.end()) next.emplace(cand.num_rx, std::move(cand));
      else if (better(cand, it->second)) it->second = std::move(cand);
    };

    for (int id : layer) {
      const Label base = arena[id];  // copy: offer() may grow the arena
      for (double o : hub_offsets) {
        const double hub = base.frontier + o;
        if (hub < 0.0 || hub > ell) continue;
        double f = base.frontier - hub;
        std::optional<double> shared = base.shared_rx;
        if (base.shared_rx) {
          for (const auto& iv : covered_interval_at_height(hub, *base.shared_rx, omega, params))
            if (iv.lo - hub <= f + tol && iv.hi - hub > f) f = iv.hi - hub;
        }
        Label cand;
        cand.num_tx = base.num_tx + 1;
        cand.num_rx = base.num_rx;
        cand.parent = id;
        cand.hub = hub;
        cand.shared_rx = shared;
        if (hub + f > base.frontier + tol) {
          cand.frontier = hub + f;
          offer(Label(cand));
        }
        while (hub + f < ell - tol) {
          const auto item = table.extend(f, tol, -hub, ell - hub);
          if (!item) break;
          f = std::max(f, item->hi);
          const double pos = hub + item->x;
          cand.receivers.push_back(pos);
          cand.num_rx += 1;
          cand.shared_rx = std::max(cand.shared_rx.value_or(-INFINITY), pos);
          cand.frontier = hub + f;
          offer(Label(cand));
        }
      }
    }

    // Keep the (num_rx, frontier) Pareto front.
    layer.clear();
    double best_frontier = -INFINITY;
    for (auto& [n, label] : next) {
      if (label.frontier <= best_frontier + tol) continue;
      best_frontier = label.frontier;
      arena.push_back(std::move(label));
      layer.push_back(static_cast<int>(arena.size()) - 1);
    }
  }

  if (!best_terminal)
    throw InfeasibleError("plan_narrow: no cluster sequence covers the belt; try a finer grid step");

  std::vector<Node> nodes;
  for (int id = *best_terminal; id > 0; id = arena[id].parent) {
    nodes.push_back({NodeKind::Tx, arena[id].hub});
    for (double r : arena[id].receivers) nodes.push_back({NodeKind::Rx, r});
  }
  result.placement = Placement::make(std::move(nodes), costs, Regime::Narrow);
  result.min_value = result.placement.total_cost;
  return result;
}

}  // namespace radarbelt
