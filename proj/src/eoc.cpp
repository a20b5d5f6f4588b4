#include "vem6/eoc.hpp"

#include <cmath>
#include <stdexcept>

namespace vem6 {

std::array<double, kNumIndicators> indicators(const ErrorReport& r) {
  return {r.errH2_u, r.errH1_u, r.errL2_u, r.errH1_sigma, r.errL2_sigma};
}

EocTable eoc_table(std::span<const ErrorReport> runs) {
  if (runs.size() < 2) throw std::invalid_argument("eoc_table needs at least two runs");
  for (std::size_t i = 0; i + 1 < runs.size(); ++i)
    if (!(runs[i + 1].h < runs[i].h)) throw std::invalid_argument("eoc_table: h must be strictly decreasing");
  EocTable table;
  table.runs.assign(runs.begin(), runs.end());
  for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
    const auto a = indicators(runs[i]);
    const auto b = indicators(runs[i + 1]);
    const double dh = std::log(runs[i].h / runs[i + 1].h);
    std::array<std::optional<double>, kNumIndicators> row;
    for (int j = 0; j < kNumIndicators; ++j)
      if (a[j] > kExactThreshold && b[j] > kExactThreshold) row[j] = std::log(a[j] / b[j]) / dh;
    table.rates.push_back(row);
  }
  return table;
}

}  // namespace vem6
