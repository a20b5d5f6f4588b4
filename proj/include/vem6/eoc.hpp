#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "vem6/errors.hpp"

namespace vem6 {

inline constexpr int kNumIndicators = 5;
inline constexpr std::array<std::string_view, kNumIndicators> kIndicatorNames{
    "errH2_u", "errH1_u", "errL2_u", "errH1_sigma", "errL2_sigma"};

/// Errors below this are treated as exact and not rated.
inline constexpr double kExactThreshold = 1e-13;

/// The five indicators of a report, in kIndicatorNames order.
std::array<double, kNumIndicators> indicators(const ErrorReport& report);

/// Convergence rates between consecutive runs. rates[i][j] compares runs i
/// and i+1 for indicator j; empty means the pair is exact.
struct EocTable {
  std::vector<ErrorReport> runs;
  std::vector<std::array<std::optional<double>, kNumIndicators>> rates;
};

/// Requires at least two runs with strictly decreasing h.
EocTable eoc_table(std::span<const ErrorReport> runs);

}  // namespace vem6
