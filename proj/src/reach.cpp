#include "radarbelt/reach.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace radarbelt {

namespace {

void require_omega(double omega, const RadarParams& params) {
  if (!std::isfinite(omega) || omega <= 0.0)
    throw DomainError("omega must be > 0");
  if (omega >= params.zeta_max())
    throw DomainError("omega must be < zeta_max (belt width must be < 2*zeta_max)");
}

// zeta^4 / (theta^2 + omega^2) - omega^2, clamped at 0. Since omega^2 phi^2 = zeta^4 - omega^4
// this equals omega^2 (phi - theta)(phi + theta) / (theta^2 + omega^2), which stays accurate as
// theta -> phi.
double radicand(double theta, double omega, const RadarParams& params) {
  const double z2 = params.zeta_sq();
  const double w2 = omega * omega;
  const double phi = std::sqrt((z2 - w2) * (z2 + w2)) / omega;
  const double a = theta * theta + omega * omega;
  return std::max(0.0, w2 * (phi - theta) * (phi + theta) / a);
}

double second_derivative(double theta, double omega, const RadarParams& params) {
  const double z4 = params.zeta_4();
  const double a = theta * theta + omega * omega;
  const double r = std::sqrt(radicand(theta, omega, params));
  if (r == 0.0) return -INFINITY;
  const double den = a * a * r;
  const double den_prime = 4.0 * theta * a * r - z4 * theta / r;
  return -z4 * (den - theta * den_prime) / (den * den);
}

}  // namespace

double compute_phi(double omega, const RadarParams& params) {
  require_omega(omega, params);
  const double z2 = params.zeta_sq();
  const double w2 = omega * omega;
  // zeta^4/omega^2 - omega^2 written without cancellation near omega -> zeta.
  return std::sqrt((z2 - w2) * (z2 + w2)) / omega;
}

double reach_function(double theta, double omega, const RadarParams& params) {
  const double phi = compute_phi(omega, params);
  const double slack = 1e-12 * phi;
  if (!(theta >= -slack && theta <= phi + slack))
    throw DomainError("theta must lie in [0, phi]");
  theta = std::clamp(theta, 0.0, phi);
  return std::sqrt(radicand(theta, omega, params)) + theta;
}

double reach_derivative(double theta, double omega, const RadarParams& params) {
  const double a = theta * theta + omega * omega;
  const double r = std::sqrt(radicand(theta, omega, params));
  if (r == 0.0) return theta > 0.0 ? -INFINITY : 1.0;
  return 1.0 - params.zeta_4() * theta / (a * a * r);
}

RegimeQuantities solve_theta_star(double omega, const RadarParams& params,
                                  const ThetaSolverOptions& options) {
  const double phi = compute_phi(omega, params);
  RegimeQuantities q;
  q.omega = omega;
  q.beta = params.zeta_max() / omega;
  q.phi = phi;

  // With u(theta) = sqrt(zeta^4/(theta^2+omega^2) - omega^2) we have
  // (u^2 + omega^2)(theta^2 + omega^2) = zeta^4, so g = u + theta is symmetric under
  // theta <-> u. The pair distance is u - theta, which is >= 0 exactly on [0, theta_f] with
  // theta_f^2 + omega^2 = zeta^2. Search there: g'(0) = 1 > 0 and g'(theta_f) = 0.
  const double z = params.zeta_max();
  const double theta_f = std::sqrt((z - omega) * (z + omega));
  double lo = 0.0;
  double hi = theta_f;
  double theta = 0.5 * phi < hi ? 0.5 * phi : 0.5 * hi;
  const double theta_tol = options.relative_theta_tol * phi;

  auto finish = [&](double t, int it) {
    q.iterations = it;
    q.theta_star = t;
    q.g_star = reach_function(t, omega, params);
    q.pair_distance_star = std::max(0.0, q.g_star - 2.0 * t);
    return q;
  };

  for (int it = 1; it <= options.max_iterations; ++it) {
    const double d1 = reach_derivative(theta, omega, params);
    const double d2 = second_derivative(theta, omega, params);
    // theta_f is stationary too; once beta > sqrt(2) it is a local minimum, so a vanishing
    // g' only counts where g is concave.
    if (std::abs(d1) <= options.derivative_tol && d2 < 0.0) return finish(theta, it);
    if (hi - lo <= theta_tol) {
      const bool lo_better = reach_function(lo, omega, params) >= reach_function(hi, omega, params);
      return finish(lo_better ? lo : hi, it);
    }
    if (d1 > 0.0) lo = theta;
    else hi = theta;

    double next = (d2 < 0.0 && std::isfinite(d2)) ? theta - d1 / d2 : NAN;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    theta = next;
  }
  throw NumericError("solve_theta_star: no convergence after " +
                     std::to_string(options.max_iterations) + " iterations (omega=" +
                     std::to_string(omega) + ")");
}

SinglePairReach max_single_pair_reach(double omega, const RadarParams& params) {
  require_omega(omega, params);
  // Coverage on y = omega needs zeta^4 >= 4 h^2 omega^2, so the focal distance is at most
  // zeta^2 / omega.
  const double d_max = params.zeta_sq() / omega;

  auto longest = [&](double d) {
    double best = 0.0;
    for (const auto& iv : covered_interval_at_height(0.0, d, omega, params))
      best = std::max(best, iv.length());
    return best;
  };

  SinglePairReach best{longest(0.0), 0.0};
  double lo = 0.0;
  double hi = d_max;
  constexpr int kSamples = 2000;
  for (int round = 0; round < 4; ++round) {
    const double step = (hi - lo) / kSamples;
    for (int i = 0; i <= kSamples; ++i) {
      const double d = lo + step * i;
      const double len = longest(d);
      if (len > best.length) best = {len, d};
    }
    lo = std::max(0.0, best.pair_distance - step);
    hi = std::min(d_max, best.pair_distance + step);
  }
  return best;
}

}  // namespace radarbelt
