#pragma once

// Subcommand bodies behind the `radarbelt` executable. Each returns a process exit code and
// writes human-readable output to `out` and diagnostics to `err`.

#include <iosfwd>
#include <optional>
#include <string>

namespace radarbelt::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationError = 1,
  kVerificationFailure = 2,
  kOracleMismatch = 3,
  kNumericError = 4,
};

struct PlanArgs {
  std::string config;
  std::optional<std::string> out;
  std::optional<std::string> svg;
  std::optional<double> grid_step;
};

struct SweepArgs {
  std::string config;
  std::optional<std::string> out;
  std::optional<double> grid_step;  // optional 2-D cross-check of every cell
};

struct VerifyArgs {
  std::string plan;
  std::optional<std::string> config;  // dimensions must match the plan when given
  std::optional<std::string> out;
  std::optional<double> grid_step;
};

struct OracleArgs {
  std::string config;
  int max_nodes = 6;
  std::optional<double> position_step;  // default phi / 200
};

int run_plan(const PlanArgs& args, std::ostream& out, std::ostream& err);
int run_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);
int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int run_oracle(const OracleArgs& args, std::ostream& out, std::ostream& err);

}  // namespace radarbelt::cli
