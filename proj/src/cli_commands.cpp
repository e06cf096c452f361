#include "radarbelt/cli.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "radarbelt/io.hpp"
#include "radarbelt/reach.hpp"

namespace radarbelt::cli {

namespace {

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const io::ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kValidationError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kNumericError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kNumericError;
  }
}

void print_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << "\n";
}

// Positions and parameters exactly as they appear in the written plan, so that re-verifying
// the file reproduces the same report.
Placement rounded(const Placement& p, const CostModel& costs) {
  std::vector<Node> nodes = p.nodes;
  for (auto& n : nodes) n.x = io::round12(n.x);
  return Placement::make(std::move(nodes), costs, p.regime);
}

std::string describe_gaps(const CoverageReport& report) {
  std::ostringstream s;
  for (const auto& g : report.uncovered_intervals)
    s << "uncovered [" << io::format12(g.lo) << ", " << io::format12(g.hi) << "]\n";
  return s.str();
}

bool same_value(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)); }

struct Cell {
  Placement placement;
  PlanResult plan;
  CoverageReport report;
};

Cell plan_and_verify(double length_l, double width_w, const CostModel& costs, const RadarParams& params) {
  const Belt belt = Belt::from_dimensions(length_l, width_w);
  Cell c;
  c.plan = opt_mclp(belt.half_width, belt.length, costs, params);
  const RadarParams written = RadarParams::from_zeta(io::round12(params.zeta_max()));
  const Belt written_belt = Belt::from_dimensions(io::round12(length_l), io::round12(width_w));
  c.plan.placement = rounded(c.plan.placement, costs);
  c.report = verify(c.plan.placement, written_belt, written);
  return c;
}

}  // namespace

int run_plan(const PlanArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<std::string> warnings;
    const io::InstanceConfig config = io::parse_instance_config(io::read_file(args.config), &warnings);
    print_warnings(warnings, err);

    const Cell cell = plan_and_verify(config.length_l, config.width_w, config.costs(), config.params);
    const std::string json = io::plan_to_json(config, cell.plan, cell.report);
    const auto out_path = args.out ? args.out : config.out_path;
    if (out_path)
      io::write_file(*out_path, json);
    else
      out << json;

    const auto svg_path = args.svg ? args.svg : config.svg_path;
    if (svg_path) io::write_file(*svg_path, io::render_svg(cell.plan.placement, config.belt(), config.params, cell.report));

    const auto& p = cell.plan.placement;
    std::ostream& summary = out_path ? out : err;
    summary << "regime " << to_string(p.regime) << ", tx " << p.num_tx << ", rx " << p.num_rx << ", cost "
            << io::format12(cell.plan.min_value) << ", verified " << (cell.report.covered ? "true" : "false") << "\n";
    if (!cell.report.covered) {
      err << "verification failed\n" << describe_gaps(cell.report);
      return static_cast<int>(kVerificationFailure);
    }

    const auto grid_step = args.grid_step ? args.grid_step : config.grid_step;
    if (grid_step) {
      const auto grid = verify_grid(p, config.belt(), config.params, *grid_step);
      if (!reports_agree(cell.report, grid, *grid_step)) {
        err << "exact and sampled verification disagree\n" << describe_gaps(grid);
        return static_cast<int>(kVerificationFailure);
      }
    }
    return static_cast<int>(kOk);
  });
}

int run_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<std::string> warnings;
    const io::SweepConfig config = io::parse_sweep_config(io::read_file(args.config), &warnings);
    print_warnings(warnings, err);
    const auto grid_step = args.grid_step ? args.grid_step : config.grid_step;

    std::string csv = io::csv_header();
    for (double w : config.widths) {
      for (double l : config.lengths) {
        for (double alpha : config.alphas) {
          const std::string cell_name =
              "(W=" + io::format12(w) + ", L=" + io::format12(l) + ", alpha=" + io::format12(alpha) + ")";
          Cell cell;
          try {
            if (l < w) throw DomainError("belt length must be >= width");
            cell = plan_and_verify(l, w, CostModel(alpha * config.cost_rx, config.cost_rx), config.params);
          } catch (const std::exception& e) {
            err << "sweep aborted at " << cell_name << "\n";
            throw;
          }
          if (!cell.report.covered) {
            err << "sweep aborted at " << cell_name << ": verification failed\n" << describe_gaps(cell.report);
            return static_cast<int>(kVerificationFailure);
          }
          if (grid_step) {
            const Belt belt = Belt::from_dimensions(l, w);
            const auto grid = verify_grid(cell.plan.placement, belt, config.params, *grid_step);
            if (!reports_agree(cell.report, grid, *grid_step)) {
              err << "sweep aborted at " << cell_name << ": exact and sampled verification disagree\n";
              return static_cast<int>(kVerificationFailure);
            }
          }
          const auto& p = cell.plan.placement;
          csv += io::csv_row({w, l, alpha, p.regime, p.num_tx, p.num_rx, cell.plan.min_value});
        }
      }
    }
    const auto out_path = args.out ? args.out : config.out_path;
    if (out_path)
      io::write_file(*out_path, csv);
    else
      out << csv;
    return static_cast<int>(kOk);
  });
}

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const io::PlanDocument doc = io::parse_plan(io::read_file(args.plan));
    if (args.config) {
      std::vector<std::string> warnings;
      const auto config = io::parse_instance_config(io::read_file(*args.config), &warnings);
      print_warnings(warnings, err);
      if (!same_value(config.length_l, doc.length_l) || !same_value(config.width_w, doc.width_w) ||
          !same_value(config.params.zeta_max(), doc.params.zeta_max()))
        throw io::ConfigError("plan dimensions (L, W, zeta_max) do not match the config");
    }
    const Belt belt = Belt::from_dimensions(doc.length_l, doc.width_w);
    const CoverageReport report = verify(doc.placement, belt, doc.params);
    if (args.out) io::write_file(*args.out, io::report_to_json(report));

    for (const auto& w : report.witness_map)
      out << "covered [" << io::format12(w.span.lo) << ", " << io::format12(w.span.hi) << "] by tx#" << w.tx_index
          << " rx#" << w.rx_index << "\n";
    out << describe_gaps(report);
    out << (report.covered ? "fully covered" : "NOT covered") << "\n";

    if (args.grid_step) {
      const auto grid = verify_grid(doc.placement, belt, doc.params, *args.grid_step);
      const bool agree = reports_agree(report, grid, *args.grid_step);
      out << "grid check at step " << io::format12(*args.grid_step) << ": " << (agree ? "agrees" : "DISAGREES")
          << "\n";
      if (!agree) return static_cast<int>(kVerificationFailure);
    }
    return static_cast<int>(report.covered ? kOk : kVerificationFailure);
  });
}

int run_oracle(const OracleArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<std::string> warnings;
    const io::InstanceConfig config = io::parse_instance_config(io::read_file(args.config), &warnings);
    print_warnings(warnings, err);
    const Belt belt = config.belt();
    const CostModel costs = config.costs();

    const PlanResult plan = opt_mclp(belt.half_width, belt.length, costs, config.params);
    const double step = args.position_step ? *args.position_step
                                           : compute_phi(belt.half_width, config.params) / 200.0;
    OracleResult oracle;
    try {
      oracle = brute_force_min_cost(belt, costs, config.params, args.max_nodes, step);
    } catch (const InfeasibleError& e) {
      out << "planner cost " << io::format12(plan.min_value) << "\n";
      out << "INFEASIBLE: no placement with at most " << args.max_nodes << " nodes on step "
          << io::format12(step) << " covers the belt\n";
      return static_cast<int>(kValidationError);
    }

    out << "oracle cost " << io::format12(oracle.best_cost) << " (tx " << oracle.best_placement.num_tx << ", rx "
        << oracle.best_placement.num_rx << ", " << oracle.instances_searched << " search nodes)\n";
    out << "planner cost " << io::format12(plan.min_value) << " (tx " << plan.placement.num_tx << ", rx "
        << plan.placement.num_rx << ")\n";
    const double tol = 1e-9 * std::max(1.0, oracle.best_cost);
    if (plan.min_value > oracle.best_cost + tol) {
      out << "MISMATCH\n";
      return static_cast<int>(kOracleMismatch);
    }
    if (plan.min_value < oracle.best_cost - tol)
      out << "MATCH (planner below the oracle's grid optimum)\n";
    else
      out << "MATCH\n";
    return static_cast<int>(kOk);
  });
}

}  // namespace radarbelt::cli
