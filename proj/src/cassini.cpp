#include "radarbelt/cassini.hpp"

#include <algorithm>
#include <cmath>

namespace radarbelt {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

// Polishes a root u of f(u) = F(u^2) with F(s) = s^2 + 2*b*s + c using Newton steps.
// Only accepts steps that reduce |f|, so a tangential (double) root stays where the
// closed form put it.
double polish_root(double u, double b, double c) {
  auto f = [&](double v) {
    const double s = v * v;
    return s * s + 2.0 * b * s + c;
  };
  double fu = f(u);
  for (int i = 0; i < 3 && fu != 0.0; ++i) {
    const double df = 4.0 * u * (u * u + b);
    if (df == 0.0 || !std::isfinite(df)) break;
    const double next = u - fu / df;
    const double fn = f(next);
    if (!(std::abs(fn) < std::abs(fu))) break;
    u = next;
    fu = fn;
  }
  return u;
}

}  // namespace

RadarParams RadarParams::from_zeta(double zeta_max) {
  require_finite(zeta_max, "zeta_max");
  if (zeta_max <= 0.0) throw DomainError("zeta_max must be > 0");
  return RadarParams(zeta_max);
}

RadarParams RadarParams::from_snr(double k_const, double gamma) {
  require_finite(k_const, "K");
  require_finite(gamma, "gamma");
  if (k_const <= 0.0 || gamma <= 0.0) throw DomainError("K and gamma must be > 0");
  RadarParams p(std::pow(k_const / gamma, 0.25));
  p.k_ = k_const;
  p.gamma_ = gamma;
  return p;
}

RadarParams RadarParams::scaled(double s) const {
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("scale must be > 0");
  return RadarParams(zeta_ * s);
}

std::string to_string(OvalShape shape) {
  switch (shape) {
    case OvalShape::ConvexEllipseLike: return "ConvexEllipseLike";
    case OvalShape::Waist: return "Waist";
    case OvalShape::Lemniscate: return "Lemniscate";
    case OvalShape::TwoLobes: return "TwoLobes";
  }
  return "?";
}

double distance(const Point2D& a, const Point2D& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double snr(const Point2D& t, const Point2D& x, const Point2D& r, const RadarParams& params) {
  if (!params.k_const()) throw DomainError("snr needs K; params were built from zeta_max only");
  const double dtx2 = (t.x - x.x) * (t.x - x.x) + (t.y - x.y) * (t.y - x.y);
  const double dxr2 = (r.x - x.x) * (r.x - x.x) + (r.y - x.y) * (r.y - x.y);
  if (dtx2 == 0.0 || dxr2 == 0.0) throw DomainError("target coincides with a focus (infinite SNR)");
  return *params.k_const() / (dtx2 * dxr2);
}

bool is_covered(const Point2D& t, const Point2D& r, const Point2D& x, const RadarParams& params) {
  return distance(x, t) * distance(x, r) <= params.zeta_sq();
}

OvalShape classify_shape(double pair_distance, const RadarParams& params) {
  require_finite(pair_distance, "pair distance");
  if (pair_distance < 0.0) throw DomainError("pair distance must be >= 0");
  const double z = params.zeta_max();
  if (std::abs(pair_distance - 2.0 * z) <= 1e-9 * z) return OvalShape::Lemniscate;
  if (pair_distance < std::sqrt(2.0) * z) return OvalShape::ConvexEllipseLike;
  if (pair_distance < 2.0 * z) return OvalShape::Waist;
  return OvalShape::TwoLobes;
}

std::vector<Interval> covered_interval_at_height(double t_pos, double r_pos, double height,
                                                 const RadarParams& params) {
  require_finite(t_pos, "t_pos");
  require_finite(r_pos, "r_pos");
  require_finite(height, "height");
  if (height < 0.0) throw DomainError("height must be >= 0");

  // With u = x - centre and h = half focal distance the product of squared distances is
  // (u^2 + h^2 + H^2)^2 - 4 u^2 h^2, a quadratic in s = u^2:
  //   F(s) = s^2 + 2 (H^2 - h^2) s + (h^2 + H^2)^2 - zeta^4.
  const double centre = 0.5 * (t_pos + r_pos);
  const double h = 0.5 * std::abs(r_pos - t_pos);
  const double h2 = h * h;
  const double H2 = height * height;
  const double z2 = params.zeta_sq();

  const double b = H2 - h2;
  const double c = (h2 + H2 - z2) * (h2 + H2 + z2);
  const double disc = (z2 - 2.0 * h * height) * (z2 + 2.0 * h * height);
  if (disc < 0.0) return {};

  const double sq = std::sqrt(disc);
  const double minus_b = -b;
  double s_lo;
  double s_hi;
  if (minus_b >= 0.0) {
    s_hi = minus_b + sq;
    s_lo = s_hi != 0.0 ? c / s_hi : 0.0;
  } else {
    s_lo = minus_b - sq;
    s_hi = c / s_lo;
  }
  if (!std::isfinite(s_lo) || !std::isfinite(s_hi)) throw NumericError("covered interval: non-finite root");
  if (s_lo > s_hi) std::swap(s_lo, s_hi);
  if (s_hi < 0.0) return {};

  const double u_hi = polish_root(std::sqrt(s_hi), b, c);
  if (s_lo <= 0.0) return {Interval{centre - u_hi, centre + u_hi}};

  double u_lo = polish_root(std::sqrt(s_lo), b, c);
  u_lo = std::min(u_lo, u_hi);
  return {Interval{centre - u_hi, centre - u_lo}, Interval{centre + u_lo, centre + u_hi}};
}

}  // namespace radarbelt
