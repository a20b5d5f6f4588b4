#pragma once

#include <string>
#include <vector>

#include "vem6/mesh.hpp"

namespace vem6 {

/// Lower bounds below which a ratio is reported as a warning. The defaults
/// are zero: the ratios are always reported, nothing is flagged.
struct QualityThresholds {
  double min_edge_ratio = 0.0;
  double min_face_ratio = 0.0;
};

struct CellQuality {
  double min_edge_over_h = 1.0;  ///< shortest edge / h_P
  double min_face_over_h = 1.0;  ///< smallest face diameter / h_P
  bool centroid_in_kernel = true;
};

struct QualityReport {
  std::vector<CellQuality> cells;
  std::vector<double> face_min_edge_over_h;  ///< per face: shortest edge / h_f
  double min_edge_over_h = 1.0;
  double min_face_over_h = 1.0;
  double min_face_edge_over_h = 1.0;
  std::vector<std::string> warnings;
};

/// Diagnostics for the shape-regularity assumptions. Star-shapedness is
/// tested heuristically: the cell centroid must lie strictly inside every
/// face plane, and every face centroid inside every edge line of its face.
/// Failures become warnings; nothing throws.
QualityReport check_mesh_assumptions(const PolyMesh& mesh, const QualityThresholds& thresholds = {});

}  // namespace vem6
