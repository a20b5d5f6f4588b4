#include <iostream>

#include <CLI11.hpp>

#include "cli_commands.hpp"

int main(int argc, char** argv) {
  using vem6::cli::RunConfig;
  CLI::App app{"Sixth-order virtual element solver"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with option defaults");
  RunConfig config;

  auto add_mesh = [&](CLI::App* sub) {
    sub->add_option("--type", config.mesh_type, "Mesh generator: cube or tetra");
    sub->add_option("--n", config.n, "Subdivisions per axis");
    sub->add_option("--mesh", config.mesh_path, "Mesh file (overrides --type/--n)");
  };
  auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--tol", config.tol, "CG relative residual tolerance");
    sub->add_option("--max-iter", config.max_iter, "CG iteration limit");
    sub->add_option("--quad-order", config.quad_order, "Quadrature order for loads and errors");
  };

  auto* gen = app.add_subcommand("generate", "Write a generated mesh as JSON");
  gen->add_option("--type", config.mesh_type, "Mesh generator: cube or tetra");
  gen->add_option("--n", config.n, "Subdivisions per axis");
  gen->add_option("--out", config.out, "Output path (default stdout)");

  auto* solve = app.add_subcommand("solve", "Solve one problem and write the error row");
  add_mesh(solve);
  add_solver(solve);
  solve->add_option("--problem", config.problem, "patch or trig");
  solve->add_option("--k", config.k, "Degree of the patch solution (x+y+z)^k");
  solve->add_option("--out", config.out, "Results CSV (default stdout)");
  solve->add_option("--dump", config.dump_out, "JSON dump of the dof vectors");

  auto* patch = app.add_subcommand("patch-test", "Check polynomial reproduction");
  add_mesh(patch);
  add_solver(patch);
  patch->add_option("--k", config.k, "Degree of the patch solution (x+y+z)^k");
  patch->add_option("--out", config.out, "Results CSV (default stdout)");

  auto* conv = app.add_subcommand("convergence", "Run a refinement study");
  conv->add_option("--type", config.mesh_type, "Mesh generator: cube or tetra");
  add_solver(conv);
  conv->add_option("--problem", config.problem, "patch or trig");
  conv->add_option("--k", config.k, "Degree of the patch solution (x+y+z)^k");
  conv->add_option("--levels", config.levels, "Comma separated subdivision counts")->delimiter(',');
  conv->add_option("--out", config.out, "EOC CSV (default stdout)");
  conv->add_option("--plot", config.plot_out, "Plot-data CSV");
  conv->add_option("--svg", config.svg_out, "Log-log SVG chart");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : vem6::cli::kIoFailure;
  }
  config.command = app.get_subcommands().front()->get_name();
  return vem6::cli::run(config, std::cerr);
}
