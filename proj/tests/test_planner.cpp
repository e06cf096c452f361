#include <cmath>
#include <random>

#include "doctest.h"
#include "radarbelt/reach.hpp"
#include "radarbelt/verifier.hpp"
#include "test_util.hpp"

using namespace radarbelt;

namespace {

const RadarParams kZeta2 = RadarParams::from_zeta(2.0);

bool alternates(const Placement& p) {
  for (std::size_t i = 0; i < p.nodes.size(); ++i)
    if (p.nodes[i].kind != (i % 2 == 0 ? NodeKind::Rx : NodeKind::Tx)) return false;
  return true;
}

}  // namespace

TEST_SUITE("planner") {

TEST_CASE("belt and cost model validation") {
  CHECK_THROWS_AS(Belt::make(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(Belt::make(1.0, -1.0), DomainError);
  CHECK(Belt::from_dimensions(10.0, 3.0).half_width == 1.5);
  CHECK_THROWS_AS(CostModel(0.0, 1.0), DomainError);
  CHECK(CostModel(10.0, 2.0).alpha() == 5.0);
  CHECK(CostModel(3.0, 2.0).of(2, 5) == 16.0);
}

TEST_CASE("rotated placement layouts") {
  const double phi = testutil::phi_of(1.5, 2.0);
  const auto p12 = rotated_placement(1, 2, 1.5, kZeta2);
  REQUIRE(p12.nodes.size() == 3);
  CHECK(p12.nodes[0].kind == NodeKind::Rx);
  CHECK(p12.nodes[1].x == doctest::Approx(phi));
  CHECK(p12.nodes[2].x == doctest::Approx(2.0 * phi));
  CHECK(p12.nodes[2].x == doctest::Approx(4.409586).epsilon(1e-6));
  CHECK(verify(p12, Belt::make(2.0 * phi, 1.5), kZeta2).covered);

  const auto p11 = rotated_placement(1, 1, 1.5, kZeta2);
  CHECK(p11.nodes.back().x == doctest::Approx(phi));

  const auto p33 = rotated_placement(3, 3, 1.5, kZeta2);
  CHECK(alternates(p33));
  CHECK(p33.nodes.back().kind == NodeKind::Tx);
  CHECK(p33.nodes.back().x == doctest::Approx(5.0 * phi));
  CHECK(verify(p33, Belt::make(5.0 * phi, 1.5), kZeta2).covered);

  CHECK_THROWS_AS(rotated_placement(2, 1, 1.5, kZeta2), DomainError);
  CHECK_THROWS_AS(rotated_placement(1, 3, 1.5, kZeta2), DomainError);
  CHECK_THROWS_AS(rotated_placement(0, 1, 1.5, kZeta2), DomainError);
}

TEST_CASE("min_cost_rp hand trace at omega 1.5, length 10") {
  const double phi = testutil::phi_of(1.5, 2.0);
  CHECK(std::floor(10.0 / (2.0 * phi)) == 2.0);
  const double remaining = 10.0 - 2.0 * 2.0 * phi;
  CHECK(remaining == doctest::Approx(1.1808).epsilon(1e-4));
  CHECK(std::ceil(remaining / phi) == 1.0);

  const auto r = min_cost_rp(1.5, 10.0, CostModel::unit(), kZeta2);
  CHECK(r.placement.num_tx == 3);
  CHECK(r.placement.num_rx == 3);
  CHECK(r.min_value == 6.0);
  CHECK(r.diagnostics.remaining_length == doctest::Approx(remaining));
  CHECK(alternates(r.placement));
  CHECK(verify(r.placement, Belt::make(10.0, 1.5), kZeta2).covered);
  for (const auto& n : r.placement.nodes) {
    CHECK(n.x >= 0.0);
    CHECK(n.x <= 10.0);
  }
}

TEST_CASE("min_cost_rp exact multiples of 2 phi") {
  const double phi = testutil::phi_of(1.5, 2.0);
  const auto r = min_cost_rp(1.5, 4.0 * phi, CostModel(5.0, 1.0), kZeta2);
  CHECK(r.placement.num_tx == 2);
  CHECK(r.placement.num_rx == 3);
  CHECK(r.min_value == 13.0);
}

TEST_CASE("min_cost_rp single pair branch") {
  const auto r = min_cost_rp(1.5, 2.0, CostModel(3.0, 1.0), kZeta2);
  CHECK(r.placement.nodes.size() == 2);
  CHECK(r.min_value == 4.0);
  CHECK(verify(r.placement, Belt::make(2.0, 1.5), kZeta2).covered);
  const auto q = solve_theta_star(1.5, kZeta2);
  const auto at_reach = min_cost_rp(1.5, q.g_star, CostModel::unit(), kZeta2);
  CHECK(at_reach.placement.nodes.size() == 2);
  CHECK(verify(at_reach.placement, Belt::make(q.g_star, 1.5), kZeta2).covered);
}

TEST_CASE("min_cost_rp remaining length needing a second receiver") {
  const double phi = testutil::phi_of(1.5, 2.0);
  const auto r = min_cost_rp(1.5, 2.0 * phi + 1.5 * phi, CostModel::unit(), kZeta2);
  CHECK(r.placement.num_tx == 2);
  CHECK(r.placement.num_rx == 3);
  CHECK(verify(r.placement, Belt::make(3.5 * phi, 1.5), kZeta2).covered);
}

TEST_CASE("min_cost_rp regime and input errors") {
  CHECK_THROWS_AS(min_cost_rp(1.0, 10.0, CostModel::unit(), kZeta2), DomainError);
  CHECK_THROWS_AS(min_cost_rp(2.0, 10.0, CostModel::unit(), kZeta2), DomainError);
  CHECK_THROWS_AS(min_cost_rp(1.5, 0.0, CostModel::unit(), kZeta2), DomainError);
}

TEST_CASE("min_cost_rp properties on random instances") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> z(0.5, 4.0), b(1.0 + 1e-3, std::sqrt(3.0) - 1e-3), l(0.1, 60.0),
      a(1.0, 100.0);
  for (int i = 0; i < 300; ++i) {
    const double zeta = z(rng), omega = zeta / b(rng), ell = l(rng) * zeta;
    const auto p = RadarParams::from_zeta(zeta);
    const CostModel costs(a(rng), 1.0);
    const auto r = min_cost_rp(omega, ell, costs, p);
    CHECK(std::abs(r.placement.num_tx - r.placement.num_rx) <= 1);
    CHECK(r.min_value == r.placement.total_cost);
    CHECK(r.placement.total_cost == costs.of(r.placement.num_tx, r.placement.num_rx));
    CHECK(verify(r.placement, Belt::make(ell, omega), p).covered);
    for (std::size_t k = 1; k < r.placement.nodes.size(); ++k)
      CHECK(r.placement.nodes[k - 1].x <= r.placement.nodes[k].x);

    // Scaling keeps counts and cost and scales positions.
    const auto rs = min_cost_rp(2.5 * omega, 2.5 * ell, costs, p.scaled(2.5));
    CHECK(rs.placement.num_tx == r.placement.num_tx);
    CHECK(rs.placement.num_rx == r.placement.num_rx);
    for (std::size_t k = 0; k < r.placement.nodes.size(); ++k)
      CHECK(rs.placement.nodes[k].x == doctest::Approx(2.5 * r.placement.nodes[k].x).epsilon(1e-9));
  }
}

TEST_CASE("min_cost_rp cost is monotone in length and width") {
  const CostModel costs(7.0, 1.0);
  double previous = 0.0;
  for (double ell = 0.5; ell < 80.0; ell += 0.137) {
    const double c = min_cost_rp(1.5, ell, costs, kZeta2).min_value;
    CHECK(c >= previous);
    previous = c;
  }
  for (double ell : {5.0, 20.0, 75.0}) {
    previous = 0.0;
    for (double omega = 1.16; omega < 1.99; omega += 0.01) {
      const double c = min_cost_rp(omega, ell, costs, kZeta2).min_value;
      CHECK(c >= previous);
      previous = c;
    }
  }
}

TEST_CASE("alpha below one swaps roles") {
  const auto a = min_cost_rp(1.5, 10.0, CostModel(1.0, 4.0), kZeta2);
  const auto b = min_cost_rp(1.5, 10.0, CostModel(4.0, 1.0), kZeta2);
  CHECK(a.min_value == b.min_value);
  CHECK(a.placement.num_tx == b.placement.num_rx);
  CHECK(verify(a.placement, Belt::make(10.0, 1.5), kZeta2).covered);
}

TEST_CASE("narrow planner small instances") {
  const auto r = plan_narrow(0.5, 6.0, CostModel(2.0, 1.0), kZeta2);
  CHECK(r.placement.regime == Regime::Narrow);
  CHECK(verify(r.placement, Belt::make(6.0, 0.5), kZeta2).covered);
  const auto oracle = brute_force_min_cost(Belt::make(6.0, 0.5), CostModel(2.0, 1.0), kZeta2, 5,
                                           compute_phi(0.5, kZeta2) / 200.0);
  CHECK(r.min_value <= oracle.best_cost);

  const auto reach = max_single_pair_reach(0.5, kZeta2);
  const auto single = plan_narrow(0.5, 0.95 * reach.length, CostModel(2.0, 1.0), kZeta2);
  CHECK(single.min_value == 3.0);
  CHECK(verify(single.placement, Belt::make(0.95 * reach.length, 0.5), kZeta2).covered);
}

TEST_CASE("narrow planner swaps roles with swapped costs") {
  const auto a = plan_narrow(0.6, 12.0, CostModel(5.0, 1.0), kZeta2);
  const auto b = plan_narrow(0.6, 12.0, CostModel(1.0, 5.0), kZeta2);
  CHECK(a.min_value == b.min_value);
  CHECK(a.placement.num_tx == b.placement.num_rx);
  CHECK(verify(b.placement, Belt::make(12.0, 0.6), kZeta2).covered);
}

TEST_CASE("narrow planner cost is monotone in length") {
  double previous = 0.0;
  for (double ell = 1.0; ell <= 30.0; ell += 1.3) {
    const auto r = plan_narrow(0.7, ell, CostModel(10.0, 1.0), kZeta2);
    CHECK(verify(r.placement, Belt::make(ell, 0.7), kZeta2).covered);
    CHECK(r.min_value >= previous);
    previous = r.min_value;
  }
}

TEST_CASE("opt_mclp dispatch") {
  const auto narrow = opt_mclp(1.0, 10.0, CostModel::unit(), kZeta2);
  CHECK(narrow.placement.regime == Regime::Narrow);
  const auto wide = opt_mclp(1.5, 10.0, CostModel::unit(), kZeta2);
  const auto direct = min_cost_rp(1.5, 10.0, CostModel::unit(), kZeta2);
  CHECK(wide.placement.regime == Regime::Wide);
  CHECK(wide.min_value == direct.min_value);
  REQUIRE(wide.placement.nodes.size() == direct.placement.nodes.size());
  for (std::size_t i = 0; i < wide.placement.nodes.size(); ++i)
    CHECK(wide.placement.nodes[i].x == direct.placement.nodes[i].x);

  const auto thin = opt_mclp(1.99, 3.98, CostModel::unit(), kZeta2);
  CHECK(std::isfinite(thin.min_value));
  CHECK(thin.min_value > 0.0);
  CHECK(verify(thin.placement, Belt::make(3.98, 1.99), kZeta2).covered);

  CHECK_THROWS_AS(opt_mclp(2.05, 10.0, CostModel::unit(), kZeta2), DomainError);
  CHECK_THROWS_AS(opt_mclp(1.5, 2.0, CostModel::unit(), kZeta2), DomainError);
  CHECK(is_narrow_regime(2.0 / std::sqrt(3.0), kZeta2));
  CHECK_FALSE(is_narrow_regime(2.0 / std::sqrt(3.0) + 1e-12, kZeta2));
}

}
