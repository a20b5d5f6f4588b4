#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vem6::cli {

enum ExitCode : int { kOk = 0, kNumericalFailure = 1, kIoFailure = 2 };

struct RunConfig {
  std::string command;
  std::string mesh_type = "cube";
  int n = 2;
  std::string mesh_path;  ///< takes precedence over mesh_type/n when set
  std::string problem = "trig";
  int k = 1;
  double tol = 1e-12;
  int max_iter = 20000;
  int quad_order = 6;
  std::string out;        ///< empty: stdout
  std::vector<int> levels{2, 4, 8};
  std::string plot_out;   ///< convergence plot-data CSV
  std::string svg_out;
  std::string dump_out;   ///< JSON dump of the dof vectors
};

/// Checks numeric ranges and names; throws std::invalid_argument.
void validate(const RunConfig& config);

int cmd_generate(const RunConfig& config, std::ostream& log);
int cmd_solve(const RunConfig& config, std::ostream& log);
int cmd_patch_test(const RunConfig& config, std::ostream& log);
int cmd_convergence(const RunConfig& config, std::ostream& log);

/// Runs the named command, mapping exceptions to exit codes with a message
/// on `log`.
int run(const RunConfig& config, std::ostream& log);

}  // namespace vem6::cli
