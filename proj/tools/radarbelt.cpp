// radarbelt: plan, sweep, verify and oracle subcommands.

#include <iostream>

#include "CLI11.hpp"
#include "radarbelt/cli.hpp"

int main(int argc, char** argv) {
  using namespace radarbelt::cli;
  CLI::App app{"Minimum-cost bistatic radar placement along a belt"};
  app.require_subcommand(1);

  PlanArgs plan;
  auto* plan_cmd = app.add_subcommand("plan", "Plan one instance, verify it and write a JSON plan");
  plan_cmd->add_option("--config", plan.config, "Instance config (JSON)")->required()->check(CLI::ExistingFile);
  plan_cmd->add_option("--out", plan.out, "Plan output path (default: stdout)");
  plan_cmd->add_option("--svg", plan.svg, "SVG rendering path");
  plan_cmd->add_option("--grid-step", plan.grid_step, "Also cross-check with a 2-D grid at this step");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Plan and verify every (W, L, alpha) cell, write CSV");
  sweep_cmd->add_option("--config", sweep.config, "Sweep config (JSON)")->required()->check(CLI::ExistingFile);
  sweep_cmd->add_option("--out", sweep.out, "CSV output path (default: stdout)");
  sweep_cmd->add_option("--grid-step", sweep.grid_step, "Also cross-check each cell with a 2-D grid");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Certify coverage of a JSON plan");
  verify_cmd->add_option("plan,--plan", verify.plan, "Plan file (JSON)")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--config", verify.config, "Instance config to check dimensions against");
  verify_cmd->add_option("--out", verify.out, "Coverage report output path (JSON)");
  verify_cmd->add_option("--grid-step", verify.grid_step, "Also cross-check with a 2-D grid at this step");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Compare the planner against exhaustive search");
  oracle_cmd->add_option("--config", oracle.config, "Instance config (JSON)")->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("--max-nodes", oracle.max_nodes, "Largest node count searched (2..8)")
      ->check(CLI::Range(2, 8));
  oracle_cmd->add_option("--position-step", oracle.position_step, "Position grid step (default phi/200)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kValidationError;
  }

  if (*plan_cmd) return run_plan(plan, std::cout, std::cerr);
  if (*sweep_cmd) return run_sweep(sweep, std::cout, std::cerr);
  if (*verify_cmd) return run_verify(verify, std::cout, std::cerr);
  return run_oracle(oracle, std::cout, std::cerr);
}
