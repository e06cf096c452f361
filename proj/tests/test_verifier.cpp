#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "radarbelt/reach.hpp"
#include "radarbelt/verifier.hpp"
#include "test_util.hpp"

using namespace radarbelt;

namespace {

const RadarParams kZeta2 = RadarParams::from_zeta(2.0);

double covered_length(const CoverageReport& r, double ell) {
  double len = ell;
  for (const auto& g : r.uncovered_intervals) len -= g.length();
  return len;
}

}  // namespace

TEST_SUITE("verifier") {

TEST_CASE("verify certifies the one-transmitter-two-receiver layout") {
  const double phi = testutil::phi_of(1.5, 2.0);
  const auto p = rotated_placement(1, 2, 1.5, kZeta2);
  const auto r = verify(p, Belt::make(2.0 * phi, 1.5), kZeta2);
  CHECK(r.covered);
  CHECK(r.uncovered_intervals.empty());
  CHECK(r.witness_map.size() == 2);
  CHECK(r.max_product_slack >= -1e-9);
}

TEST_CASE("verify reports the whole belt when no pair exists") {
  const auto p = Placement::make({{NodeKind::Tx, 1.0}}, CostModel::unit(), Regime::Wide);
  const auto r = verify(p, Belt::make(5.0, 1.0), kZeta2);
  CHECK_FALSE(r.covered);
  REQUIRE(r.uncovered_intervals.size() == 1);
  CHECK(r.uncovered_intervals[0].lo == 0.0);
  CHECK(r.uncovered_intervals[0].hi == 5.0);
  CHECK(r.witness_map.empty());

  const auto empty = verify(Placement{}, Belt::make(5.0, 1.0), kZeta2);
  CHECK_FALSE(empty.covered);
}

TEST_CASE("over-stretched pair leaves the corners uncovered") {
  const double phi = testutil::phi_of(1.5, 2.0);
  // Direct product at the left corner exceeds zeta^2.
  CHECK(testutil::product(0.0, phi + 0.1, 0.0, 1.5) > 4.0);
  const auto p = Placement::make({{NodeKind::Rx, 0.0}, {NodeKind::Tx, phi + 0.1}}, CostModel::unit(), Regime::Wide);
  const auto r = verify(p, Belt::make(phi, 1.5), kZeta2);
  CHECK_FALSE(r.covered);
  REQUIRE_FALSE(r.uncovered_intervals.empty());
  CHECK(r.uncovered_intervals.front().lo == 0.0);
  CHECK(r.max_product_slack < 0.0);
}

TEST_CASE("report intervals are sorted, disjoint and complete") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double ell = 5.0 + 30.0 * u(rng);
    const double omega = 0.1 + 1.8 * u(rng);
    std::vector<Node> nodes;
    const int count = 2 + static_cast<int>(8 * u(rng));
    for (int k = 0; k < count; ++k) nodes.push_back({u(rng) < 0.5 ? NodeKind::Tx : NodeKind::Rx, ell * u(rng)});
    const auto p = Placement::make(nodes, CostModel::unit(), Regime::Wide);
    const auto r = verify(p, Belt::make(ell, omega), kZeta2);
    CHECK(r.covered == r.uncovered_intervals.empty());
    for (std::size_t k = 0; k < r.uncovered_intervals.size(); ++k) {
      CHECK(r.uncovered_intervals[k].lo >= 0.0);
      CHECK(r.uncovered_intervals[k].hi <= ell);
      CHECK(r.uncovered_intervals[k].lo < r.uncovered_intervals[k].hi);
      if (k > 0) CHECK(r.uncovered_intervals[k - 1].hi < r.uncovered_intervals[k].lo);
    }
    // Covered length from the witnesses' union must match the complement of the gaps.
    std::vector<Interval> spans;
    for (const auto& w : r.witness_map) spans.push_back(w.span);
    std::sort(spans.begin(), spans.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    double union_len = 0.0, cursor = -1.0;
    for (const auto& s : spans) {
      const double lo = std::max(s.lo, cursor);
      if (s.hi > lo) union_len += s.hi - lo;
      cursor = std::max(cursor, s.hi);
    }
    CHECK(std::abs(union_len - covered_length(r, ell)) <= 1e-9 * ell);

    // Witnesses really cover their spans at the top edge.
    for (const auto& w : r.witness_map) {
      const double tx = p.nodes[w.tx_index].x, rx = p.nodes[w.rx_index].x;
      CHECK(p.nodes[w.tx_index].kind == NodeKind::Tx);
      CHECK(p.nodes[w.rx_index].kind == NodeKind::Rx);
      const double mid = 0.5 * (w.span.lo + w.span.hi);
      CHECK(testutil::product(tx, rx, mid, omega) <= 4.0 * (1 + 1e-9));
    }
  }
}

TEST_CASE("grid verification agrees with exact verification") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double step = 2.0 / 500.0;
  for (int i = 0; i < 40; ++i) {
    const double ell = 4.0 + 10.0 * u(rng);
    const double omega = 0.2 + 1.6 * u(rng);
    std::vector<Node> nodes;
    for (int k = 0; k < 6; ++k) nodes.push_back({k % 2 ? NodeKind::Tx : NodeKind::Rx, ell * u(rng)});
    const auto p = Placement::make(nodes, CostModel::unit(), Regime::Wide);
    const Belt belt = Belt::make(ell, omega);
    const auto exact = verify(p, belt, kZeta2);
    const auto grid = verify_grid(p, belt, kZeta2, step);
    CHECK(reports_agree(exact, grid, step));
  }
}

TEST_CASE("grid verification examples") {
  const double omega = 1.0;
  const double ell = 2.0 * std::sqrt(4.0 - omega * omega);
  const auto colocated = Placement::make({{NodeKind::Tx, ell / 2}, {NodeKind::Rx, ell / 2}}, CostModel::unit(),
                                         Regime::Narrow);
  CHECK(verify_grid(colocated, Belt::make(ell, omega), kZeta2, 2.0 / 200).covered);
  CHECK(verify(colocated, Belt::make(ell, omega), kZeta2).covered);

  const auto empty = verify_grid(Placement{}, Belt::make(3.0, 1.0), kZeta2, 0.1);
  REQUIRE(empty.uncovered_intervals.size() == 1);
  CHECK(empty.uncovered_intervals[0].lo == 0.0);
  CHECK(empty.uncovered_intervals[0].hi == 3.0);

  CHECK_THROWS_AS(verify_grid(Placement{}, Belt::make(1e4, 1.0), kZeta2, 1e-4), DomainError);
  CHECK_THROWS_AS(verify_grid(Placement{}, Belt::make(3.0, 1.0), kZeta2, 0.0), DomainError);
}

TEST_CASE("oracle examples") {
  const double phi = testutil::phi_of(1.5, 2.0);
  const Belt belt = Belt::make(2.0 * phi, 1.5);
  const auto unit = brute_force_min_cost(belt, CostModel::unit(), kZeta2, 4, phi / 200);
  CHECK(unit.best_cost == 3.0);
  CHECK(verify(unit.best_placement, belt, kZeta2).covered);

  const auto pricey = brute_force_min_cost(belt, CostModel(100.0, 1.0), kZeta2, 4, phi / 200);
  CHECK(pricey.best_cost == 102.0);
  CHECK(pricey.best_placement.num_tx == 1);
  CHECK(pricey.best_placement.num_rx == 2);

  const auto q = solve_theta_star(1.5, kZeta2);
  const auto short_belt = brute_force_min_cost(Belt::make(0.9 * q.g_star, 1.5), CostModel(3.0, 1.0), kZeta2, 4,
                                               phi / 200);
  CHECK(short_belt.best_cost == 4.0);
  CHECK(min_cost_rp(1.5, 0.9 * q.g_star, CostModel(3.0, 1.0), kZeta2).min_value == 4.0);
}

TEST_CASE("oracle errors") {
  const Belt belt = Belt::make(50.0, 1.5);
  CHECK_THROWS_AS(brute_force_min_cost(belt, CostModel::unit(), kZeta2, 9, 0.1), DomainError);
  CHECK_THROWS_AS(brute_force_min_cost(belt, CostModel::unit(), kZeta2, 4, 0.0), DomainError);
  CHECK_THROWS_AS(brute_force_min_cost(belt, CostModel::unit(), kZeta2, 4, 0.05), InfeasibleError);
}

TEST_CASE("oracle matches the wide planner on short belts") {
  const double phi = testutil::phi_of(1.5, 2.0);
  for (double k : {0.8, 1.2, 2.0, 2.7}) {
    const double ell = k * phi;
    const auto plan = min_cost_rp(1.5, ell, CostModel(2.0, 1.0), kZeta2);
    const auto oracle = brute_force_min_cost(Belt::make(ell, 1.5), CostModel(2.0, 1.0), kZeta2, 4, phi / 200);
    CHECK(plan.min_value == oracle.best_cost);
  }
}

}
