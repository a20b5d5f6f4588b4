#include "vem6/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace vem6 {

namespace {

void write_header(std::ostream& out) {
  out << "mesh_type,level,h,ndof_sigma,ndof_u";
  for (auto name : kIndicatorNames) out << ',' << name;
}

void write_row(std::ostream& out, const RunRecord& r) {
  out << r.mesh_type << ',' << r.level << ',' << format_double(r.errors.h) << ',' << r.errors.ndof_sigma << ','
      << r.errors.ndof_u;
  for (double e : indicators(r.errors)) out << ',' << format_double(e);
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_results_csv(std::ostream& out, std::span<const RunRecord> rows) {
  write_header(out);
  out << '\n';
  for (const RunRecord& r : rows) {
    write_row(out, r);
    out << '\n';
  }
}

void write_eoc_csv(std::ostream& out, std::span<const RunRecord> rows, const EocTable& table) {
  write_header(out);
  for (auto name : kIndicatorNames) out << ",rate_" << name;
  out << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    write_row(out, rows[i]);
    for (int j = 0; j < kNumIndicators; ++j) {
      out << ',';
      if (i == 0 || i - 1 >= table.rates.size()) continue;
      const auto& rate = table.rates[i - 1][static_cast<std::size_t>(j)];
      if (rate) out << format_double(*rate);
      else out << "exact";
    }
    out << '\n';
  }
}

void write_plot_csv(std::ostream& out, std::span<const RunRecord> rows) {
  out << "indicator,level,h,error,log_h,log_error\n";
  for (int j = 0; j < kNumIndicators; ++j)
    for (const RunRecord& r : rows) {
      const double e = indicators(r.errors)[static_cast<std::size_t>(j)];
      if (!(e > kExactThreshold)) continue;
      out << kIndicatorNames[static_cast<std::size_t>(j)] << ',' << r.level << ',' << format_double(r.errors.h) << ','
          << format_double(e) << ',' << format_double(std::log10(r.errors.h)) << ',' << format_double(std::log10(e))
          << '\n';
    }
}

void write_plot_svg(std::ostream& out, std::span<const RunRecord> rows) {
  constexpr double width = 640, height = 480, margin = 60;
  constexpr const char* colors[kNumIndicators] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  double xmin = std::numeric_limits<double>::max(), xmax = -xmin, ymin = xmin, ymax = -xmin;
  for (const RunRecord& r : rows) {
    xmin = std::min(xmin, std::log10(r.errors.h));
    xmax = std::max(xmax, std::log10(r.errors.h));
    for (double e : indicators(r.errors))
      if (e > kExactThreshold) {
        ymin = std::min(ymin, std::log10(e));
        ymax = std::max(ymax, std::log10(e));
      }
  }
  if (xmax <= xmin) xmax = xmin + 1;
  if (ymax <= ymin) ymax = ymin + 1;
  auto px = [&](double lx) { return margin + (lx - xmin) / (xmax - xmin) * (width - 2 * margin); };
  auto py = [&](double ly) { return height - margin - (ly - ymin) / (ymax - ymin) * (height - 2 * margin); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin << "\" y2=\""
      << height - margin << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << height - margin
      << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"" << height - 15 << "\" text-anchor=\"middle\">log10 h</text>\n";
  out << "<text x=\"15\" y=\"" << height / 2 << "\" transform=\"rotate(-90 15 " << height / 2
      << ")\" text-anchor=\"middle\">log10 error</text>\n";
  for (int j = 0; j < kNumIndicators; ++j) {
    std::string points;
    for (const RunRecord& r : rows) {
      const double e = indicators(r.errors)[static_cast<std::size_t>(j)];
      if (!(e > kExactThreshold)) continue;
      points += format_double(px(std::log10(r.errors.h))) + "," + format_double(py(std::log10(e))) + " ";
    }
    if (points.empty()) continue;
    out << "<polyline fill=\"none\" stroke=\"" << colors[j] << "\" points=\"" << points << "\"/>\n";
    out << "<text x=\"" << width - margin + 5 << "\" y=\"" << margin + 15 * j << "\" fill=\"" << colors[j]
        << "\" font-size=\"11\">" << kIndicatorNames[static_cast<std::size_t>(j)] << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace vem6
