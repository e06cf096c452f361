#include "radarbelt/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace radarbelt {

namespace {

struct PairPiece {
  Interval span;
  int tx;
  int rx;
};

std::vector<PairPiece> pair_pieces(const Placement& placement, const Belt& belt,
                                   const RadarParams& params) {
  std::vector<PairPiece> pieces;
  const auto& nodes = placement.nodes;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    if (nodes[i].kind != NodeKind::Tx) continue;
    for (int j = 0; j < static_cast<int>(nodes.size()); ++j) {
      if (nodes[j].kind != NodeKind::Rx) continue;
      for (const auto& iv : covered_interval_at_height(nodes[i].x, nodes[j].x, belt.half_width, params)) {
        const double lo = std::max(iv.lo, 0.0);
        const double hi = std::min(iv.hi, belt.length);
        if (lo <= hi) pieces.push_back({{lo, hi}, i, j});
      }
    }
  }
  std::sort(pieces.begin(), pieces.end(), [](const PairPiece& a, const PairPiece& b) {
    return a.span.lo < b.span.lo || (a.span.lo == b.span.lo && a.span.hi > b.span.hi);
  });
  return pieces;
}

// Converts a sorted list of covered spans into the gaps of [0, length], dropping gaps no longer
// than tol.
std::vector<Interval> gaps_of(const std::vector<Interval>& covered, double length, double tol) {
  std::vector<Interval> gaps;
  double cursor = 0.0;
  for (const auto& c : covered) {
    if (c.lo - cursor > tol) gaps.push_back({cursor, c.lo});
    cursor = std::max(cursor, c.hi);
  }
  if (length - cursor > tol) gaps.push_back({cursor, length});
  return gaps;
}

}  // namespace

double CoverageReport::uncovered_length() const {
  double total = 0.0;
  for (const auto& g : uncovered_intervals) total += g.length();
  return total;
}

CoverageReport verify(const Placement& placement, const Belt& belt, const RadarParams& params) {
  const double tol = kGapTolerance * params.zeta_max();
  const auto pieces = pair_pieces(placement, belt, params);

  CoverageReport report;
  std::vector<Interval> merged;
  // Greedy chain cover: inside each maximal span keep only pieces that push the right end.
  for (std::size_t i = 0; i < pieces.size();) {
    const double start = pieces[i].span.lo;
    double reach = pieces[i].span.hi;
    report.witness_map.push_back({pieces[i].span, pieces[i].tx, pieces[i].rx});
    std::size_t j = i + 1;
    while (j < pieces.size() && pieces[j].span.lo <= reach + tol) {
      // Among pieces starting inside the current span pick the one reaching furthest.
      std::size_t best = j;
      while (j < pieces.size() && pieces[j].span.lo <= reach + tol) {
        if (pieces[j].span.hi > pieces[best].span.hi) best = j;
        ++j;
      }
      if (pieces[best].span.hi > reach) {
        report.witness_map.push_back({pieces[best].span, pieces[best].tx, pieces[best].rx});
        reach = pieces[best].span.hi;
      }
    }
    merged.push_back({start, reach});
    i = j;
  }

  report.uncovered_intervals = gaps_of(merged, belt.length, tol);
  report.covered = report.uncovered_intervals.empty();

  // Diagnostic slack on a fixed sampling of the top edge.
  const double h2 = belt.half_width * belt.half_width;
  double slack = std::numeric_limits<double>::infinity();
  constexpr int kSlackSamples = 1000;
  for (int s = 0; s <= kSlackSamples; ++s) {
    const double x = belt.length * s / kSlackSamples;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& t : placement.nodes) {
      if (t.kind != NodeKind::Tx) continue;
      for (const auto& r : placement.nodes) {
        if (r.kind != NodeKind::Rx) continue;
        best = std::min(best, ((x - t.x) * (x - t.x) + h2) * ((x - r.x) * (x - r.x) + h2));
      }
    }
    slack = std::min(slack, params.zeta_4() - best);
  }
  report.max_product_slack = slack;
  return report;
}

CoverageReport verify_grid(const Placement& placement, const Belt& belt, const RadarParams& params,
                           double grid_step) {
  if (!(grid_step > 0.0) || !std::isfinite(grid_step)) throw DomainError("grid step must be > 0");
  const long nx = static_cast<long>(std::floor(belt.length / grid_step)) + 2;
  const long ny = static_cast<long>(std::floor(2.0 * belt.half_width / grid_step)) + 2;
  if (static_cast<double>(nx) * static_cast<double>(ny) > 1e8)
    throw DomainError("verify_grid: more than 1e8 samples; use a larger grid step");

  auto column_x = [&](long i) { return std::min(belt.length, i * grid_step); };
  auto row_y = [&](long j) { return std::min(belt.half_width, -belt.half_width + j * grid_step); };

  std::vector<std::pair<double, double>> pairs;  // (tx x, rx x)
  for (const auto& t : placement.nodes)
    if (t.kind == NodeKind::Tx)
      for (const auto& r : placement.nodes)
        if (r.kind == NodeKind::Rx) pairs.emplace_back(t.x, r.x);

  // Products within a relative 1e-9 of zeta^4 count as on the boundary, the same scale as the
  // exact check's gap tolerance (written plans round positions to 12 digits).
  constexpr double kRelTol = 1e-9;
  const double limit = params.zeta_4() * (1.0 + kRelTol);
  const double z2 = params.zeta_sq();
  std::vector<bool> column_ok(nx, true);
  std::vector<std::pair<double, double>> candidates;
  for (long i = 0; i < nx; ++i) {
    const double x = column_x(i);
    candidates.clear();
    // |x - t| * |x - r| lower-bounds the product of distances for every y.
    for (const auto& [t, r] : pairs)
      if (std::abs(x - t) * std::abs(x - r) <= z2 * (1.0 + kRelTol)) candidates.emplace_back(t, r);
    std::size_t hint = 0;
    for (long j = 0; j < ny && column_ok[i]; ++j) {
      const double y2 = row_y(j) * row_y(j);
      bool hit = false;
      for (std::size_t k = 0; k < candidates.size() && !hit; ++k) {
        const auto& [t, r] = candidates[(hint + k) % candidates.size()];
        if (((x - t) * (x - t) + y2) * ((x - r) * (x - r) + y2) <= limit) {
          hit = true;
          hint = (hint + k) % candidates.size();
        }
      }
      if (!hit) column_ok[i] = false;
    }
  }

  CoverageReport report;
  for (long i = 0; i < nx;) {
    if (column_ok[i]) {
      ++i;
      continue;
    }
    long j = i;
    while (j + 1 < nx && !column_ok[j + 1]) ++j;
    report.uncovered_intervals.push_back({column_x(i), column_x(j)});
    i = j + 1;
  }
  report.covered = report.uncovered_intervals.empty();
  report.max_product_slack = NAN;
  return report;
}

bool reports_agree(const CoverageReport& exact, const CoverageReport& grid, double grid_step) {
  auto overlaps = [&](const Interval& a, const Interval& b) {
    return a.lo <= b.hi + grid_step && b.lo <= a.hi + grid_step;
  };
  for (const auto& g : grid.uncovered_intervals) {
    const bool explained = std::any_of(exact.uncovered_intervals.begin(), exact.uncovered_intervals.end(),
                                       [&](const Interval& e) { return overlaps(e, g); });
    if (!explained) return false;
  }
  for (const auto& e : exact.uncovered_intervals) {
    if (e.length() <= 2.0 * grid_step) continue;
    const bool seen = std::any_of(grid.uncovered_intervals.begin(), grid.uncovered_intervals.end(),
                                  [&](const Interval& g) { return overlaps(e, g); });
    if (!seen) return false;
  }
  return true;
}

}  // namespace radarbelt
