#pragma once

// Cassini-oval sensing model for a bistatic transmitter/receiver pair.
//
// A target x is detected by the pair (t, r) when
//     SNR(t, x, r) = K / (d^2(t,x) * d^2(x,r)) >= gamma,
// which is the same as d(x,t) * d(x,r) <= zeta_max^2 with zeta_max = (K/gamma)^(1/4).
// Everything downstream works with zeta_max only.

#include <optional>
#include <string>
#include <vector>

#include "radarbelt/errors.hpp"

namespace radarbelt {

class RadarParams {
public:
  static RadarParams from_zeta(double zeta_max);
  /// Reduces (K, gamma) to zeta_max = (K/gamma)^(1/4); the pair is kept for provenance.
  static RadarParams from_snr(double k_const, double gamma);

  double zeta_max() const { return zeta_; }
  double zeta_sq() const { return zeta_ * zeta_; }
  double zeta_4() const { return zeta_sq() * zeta_sq(); }
  const std::optional<double>& k_const() const { return k_; }
  const std::optional<double>& gamma() const { return gamma_; }

  RadarParams scaled(double s) const;

private:
  explicit RadarParams(double zeta) : zeta_(zeta) {}
  double zeta_;
  std::optional<double> k_;
  std::optional<double> gamma_;
};

struct Point2D {
  double x = 0.0;
  double y = 0.0;
};

enum class OvalShape { ConvexEllipseLike, Waist, Lemniscate, TwoLobes };

std::string to_string(OvalShape shape);

/// Closed interval [lo, hi] on the x axis.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

double distance(const Point2D& a, const Point2D& b);

/// Requires K from the params (throws DomainError if built from zeta only).
/// Throws DomainError when x coincides with t or r.
double snr(const Point2D& t, const Point2D& x, const Point2D& r, const RadarParams& params);

/// d(x,t) * d(x,r) <= zeta_max^2. Boundary counts as covered.
bool is_covered(const Point2D& t, const Point2D& r, const Point2D& x, const RadarParams& params);

/// Shape of the oval for two foci at the given distance.
/// The lemniscate case is matched within an absolute tolerance of 1e-9 * zeta_max.
OvalShape classify_shape(double pair_distance, const RadarParams& params);

/// All x with ((x-t)^2 + h^2) * ((x-r)^2 + h^2) <= zeta^4, i.e. the part of the line y = h
/// covered by a pair whose foci sit on y = 0 at t_pos and r_pos.
///
/// Returns zero, one or two disjoint intervals sorted by lo.
std::vector<Interval> covered_interval_at_height(double t_pos, double r_pos, double height,
                                                 const RadarParams& params);

}  // namespace radarbelt
