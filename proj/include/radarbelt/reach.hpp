#pragma once

// Single-pair reach along a belt of half-width omega.
//
// If a pair's near focus sits theta inside the belt's vertical boundary and the far
// corner is exactly on the oval, the pair covers a full-width rectangle of length
//     g(theta) = sqrt(zeta^4 / (theta^2 + omega^2) - omega^2) + theta,   0 <= theta <= phi,
// with phi = sqrt(zeta^4 / omega^2 - omega^2). g(0) = g(phi) = phi and g'(0) = 1, so the
// maximum is interior.

#include "radarbelt/cassini.hpp"

namespace radarbelt {

struct RegimeQuantities {
  double omega = 0.0;
  double beta = 0.0;
  double phi = 0.0;
  double theta_star = 0.0;
  double g_star = 0.0;
  double pair_distance_star = 0.0;  // g_star - 2 theta_star, clamped at 0
  int iterations = 0;
};

/// sqrt(beta^2 zeta^2 - omega^2). Requires 0 < omega < zeta_max.
double compute_phi(double omega, const RadarParams& params);

/// g(theta) for theta in [0, phi] (a relative slack of 1e-12 * phi is tolerated at the ends).
double reach_function(double theta, double omega, const RadarParams& params);

/// g'(theta), analytic.
double reach_derivative(double theta, double omega, const RadarParams& params);

struct ThetaSolverOptions {
  int max_iterations = 200;
  double derivative_tol = 1e-10;
  double relative_theta_tol = 1e-10;
};

/// Maximises g by Newton's method on g', safeguarded by bisection on the sign-change bracket.
/// g is symmetric under theta <-> g(theta) - theta, so the search is limited to the half of
/// [0, phi] where the pair distance g - 2 theta is nonnegative, i.e. theta^2 + omega^2 <= zeta^2.
/// Accepts any omega in (0, zeta_max). Throws NumericError when the iteration cap is hit.
RegimeQuantities solve_theta_star(double omega, const RadarParams& params,
                                  const ThetaSolverOptions& options = {});

/// Longest contiguous stretch of the line y = omega that a single pair can cover, maximised
/// over the focal distance. In the wide regime this coincides with g(theta'); in the narrow
/// regime stretched (waist-shaped) ovals reach further than g(theta') suggests.
struct SinglePairReach {
  double length = 0.0;
  double pair_distance = 0.0;
};
SinglePairReach max_single_pair_reach(double omega, const RadarParams& params);

}  // namespace radarbelt
