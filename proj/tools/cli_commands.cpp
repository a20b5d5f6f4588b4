#include "cli_commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "vem6/eoc.hpp"
#include "vem6/errors.hpp"
#include "vem6/mesh_io.hpp"
#include "vem6/report_io.hpp"
#include "vem6/sixth_order.hpp"

namespace vem6::cli {

namespace {

PolyMesh generate(const std::string& type, int n) {
  if (type == "cube") return generate_cube_mesh(n);
  if (type == "tetra") return generate_tet_mesh(n);
  throw std::invalid_argument("unsupported generator: import only");
}

PolyMesh load_mesh(const RunConfig& c) {
  if (!c.mesh_path.empty()) return read_mesh_file(c.mesh_path);
  return generate(c.mesh_type, c.n);
}

std::string mesh_label(const RunConfig& c) { return c.mesh_path.empty() ? c.mesh_type : "file"; }

// Writes through `body` to config.out, or to stdout when no path is given.
template <class Body>
void emit(const std::string& path, Body&& body) {
  if (path.empty()) {
    body(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot open output file: " + path);
  body(out);
  if (!out) throw std::ios_base::failure("failed writing output file: " + path);
}

SolveConfig solve_config(const RunConfig& c) {
  SolveConfig s;
  s.solver.tol = c.tol;
  s.solver.max_iter = c.max_iter;
  s.load_order = c.quad_order;
  s.boundary_order = c.quad_order;
  return s;
}

RunRecord run_one(const PolyMesh& mesh, const ProblemData& problem, const RunConfig& c, const std::string& label,
                  int level, SixthOrderSolution* keep = nullptr) {
  SixthOrderSolution sol = solve_sixth_order(mesh, problem, solve_config(c));
  RunRecord rec{label, level, compute_errors(mesh, sol, problem, c.quad_order)};
  if (keep) *keep = std::move(sol);
  return rec;
}

void dump_dofs(const std::string& path, const SixthOrderSolution& sol) {
  nlohmann::json j;
  j["sigma"] = std::vector<double>(sol.sigma.data(), sol.sigma.data() + sol.sigma.size());
  j["u"] = std::vector<double>(sol.u.data(), sol.u.data() + sol.u.size());
  j["sigma_iterations"] = sol.sigma_report.iterations;
  j["u_iterations"] = sol.u_report.iterations;
  emit(path, [&](std::ostream& out) { out << j.dump(1) << '\n'; });
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.n < 1) throw std::invalid_argument("--n must be positive");
  if (!(c.tol > 0.0)) throw std::invalid_argument("--tol must be positive");
  if (c.max_iter < 1) throw std::invalid_argument("--max-iter must be positive");
  if (c.quad_order < 1 || c.quad_order > 10) throw std::invalid_argument("--quad-order must lie in [1, 10]");
  if (c.problem != "patch" && c.problem != "trig") throw std::invalid_argument("unknown problem: " + c.problem);
  if (c.problem == "patch" && (c.k < 1 || c.k > 6)) throw std::invalid_argument("--k must lie in [1, 6]");
  for (int l : c.levels)
    if (l < 1) throw std::invalid_argument("--levels entries must be positive");
}

int cmd_generate(const RunConfig& c, std::ostream& log) {
  const PolyMesh mesh = generate(c.mesh_type, c.n);
  emit(c.out, [&](std::ostream& out) { out << export_mesh(mesh) << '\n'; });
  log << "generated " << c.mesh_type << " mesh: " << mesh.num_vertices() << " vertices, " << mesh.num_cells()
      << " cells\n";
  return kOk;
}

int cmd_solve(const RunConfig& c, std::ostream& log) {
  const PolyMesh mesh = load_mesh(c);
  const ProblemData problem = make_problem(c.problem, c.k);
  SixthOrderSolution sol;
  const RunRecord rec = run_one(mesh, problem, c, mesh_label(c), c.mesh_path.empty() ? c.n : 0, &sol);
  emit(c.out, [&](std::ostream& out) { write_results_csv(out, std::span(&rec, 1)); });
  if (!c.dump_out.empty()) dump_dofs(c.dump_out, sol);
  log << "cg iterations: sigma " << sol.sigma_report.iterations << ", u " << sol.u_report.iterations << '\n';
  return kOk;
}

int cmd_patch_test(const RunConfig& c, std::ostream& log) {
  const PolyMesh mesh = load_mesh(c);
  const ProblemData problem = manufactured_patch(c.k);
  const RunRecord rec = run_one(mesh, problem, c, mesh_label(c), c.mesh_path.empty() ? c.n : 0);
  emit(c.out, [&](std::ostream& out) { write_results_csv(out, std::span(&rec, 1)); });
  // u in P_2 is reproduced exactly; sigma is exact while it stays in P_1.
  const ErrorReport& e = rec.errors;
  const double tol = 1e-8;
  auto rel = [](double err, double norm) { return err / std::max(1.0, norm); };
  bool ok = true;
  if (c.k <= 2)
    ok = rel(e.errH2_u, e.normH2_u) <= tol && rel(e.errH1_u, e.normH1_u) <= tol && rel(e.errL2_u, e.normL2_u) <= tol;
  if (c.k <= 5)
    ok = ok && rel(e.errH1_sigma, e.normH1_sigma) <= tol && rel(e.errL2_sigma, e.normL2_sigma) <= tol;
  log << "patch test k=" << c.k << ": " << (ok ? "exact" : "NOT exact") << '\n';
  return ok ? kOk : kNumericalFailure;
}

int cmd_convergence(const RunConfig& c, std::ostream& log) {
  if (c.levels.size() < 2) throw std::invalid_argument("--levels needs at least two entries");
  const ProblemData problem = make_problem(c.problem, c.k);
  std::vector<RunRecord> rows;
  for (int level : c.levels) {
    const PolyMesh mesh = generate(c.mesh_type, level);
    rows.push_back(run_one(mesh, problem, c, c.mesh_type, level));
    log << "level " << level << " done (h = " << rows.back().errors.h << ")\n";
  }
  std::vector<ErrorReport> reports;
  for (const RunRecord& r : rows) reports.push_back(r.errors);
  const EocTable table = eoc_table(reports);
  emit(c.out, [&](std::ostream& out) { write_eoc_csv(out, rows, table); });
  if (!c.plot_out.empty()) emit(c.plot_out, [&](std::ostream& out) { write_plot_csv(out, rows); });
  if (!c.svg_out.empty()) emit(c.svg_out, [&](std::ostream& out) { write_plot_svg(out, rows); });
  return kOk;
}

int run(const RunConfig& c, std::ostream& log) {
  try {
    validate(c);
    if (c.command == "generate") return cmd_generate(c, log);
    if (c.command == "solve") return cmd_solve(c, log);
    if (c.command == "patch-test") return cmd_patch_test(c, log);
    if (c.command == "convergence") return cmd_convergence(c, log);
    throw std::invalid_argument("unknown command: " + c.command);
  } catch (const std::ios_base::failure& e) {
    log << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const ParseError& e) {
    log << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const ValidationError& e) {
    log << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const std::invalid_argument& e) {
    log << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kNumericalFailure;
  }
}

}  // namespace vem6::cli
