#pragma once

#include <ostream>
#include <span>
#include <string>

#include "vem6/eoc.hpp"

namespace vem6 {

/// One row of a results table.
struct RunRecord {
  std::string mesh_type;
  int level = 0;
  ErrorReport errors;
};

/// %.17g formatting, so values round-trip exactly.
std::string format_double(double x);

/// Header: mesh_type,level,h,ndof_sigma,ndof_u,errH2_u,errH1_u,errL2_u,errH1_sigma,errL2_sigma
void write_results_csv(std::ostream& out, std::span<const RunRecord> rows);

/// Results columns plus rate_<indicator>; the first row has empty rates and
/// exact pairs read "exact".
void write_eoc_csv(std::ostream& out, std::span<const RunRecord> rows, const EocTable& table);

/// Long format series: indicator,level,h,error,log_h,log_error (exact
/// errors are skipped since their logarithm carries no information).
void write_plot_csv(std::ostream& out, std::span<const RunRecord> rows);

/// Static log-log chart of every indicator against h.
void write_plot_svg(std::ostream& out, std::span<const RunRecord> rows);

}  // namespace vem6
