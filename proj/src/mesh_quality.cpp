#include "vem6/mesh_quality.hpp"

#include <algorithm>

namespace vem6 {

QualityReport check_mesh_assumptions(const PolyMesh& mesh, const QualityThresholds& thresholds) {
  QualityReport report;
  report.face_min_edge_over_h.resize(static_cast<std::size_t>(mesh.num_faces()));
  for (Index fi = 0; fi < mesh.num_faces(); ++fi) {
    const Face& face = mesh.face(fi);
    double shortest = face.diameter;
    for (Index e : face.edges) shortest = std::min(shortest, mesh.edge(e).length);
    const double ratio = shortest / face.diameter;
    report.face_min_edge_over_h[static_cast<std::size_t>(fi)] = ratio;
    report.min_face_edge_over_h = std::min(report.min_face_edge_over_h, ratio);

    const std::size_t m = face.vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Point2 a = face.to_local(mesh.vertex(face.vertices[i]));
      const Point2 b = face.to_local(mesh.vertex(face.vertices[(i + 1) % m]));
      // Centroid is the local origin; it must sit left of each CCW edge.
      if (a.x() * b.y() - a.y() * b.x() <= 0.0) {
        report.warnings.push_back("A2: face " + std::to_string(fi) + " centroid outside its kernel");
        break;
      }
    }
  }

  report.cells.resize(static_cast<std::size_t>(mesh.num_cells()));
  for (Index ci = 0; ci < mesh.num_cells(); ++ci) {
    const Cell& cell = mesh.cell(ci);
    CellQuality& q = report.cells[static_cast<std::size_t>(ci)];
    double shortest = cell.diameter, smallest_face = cell.diameter;
    for (const CellFace& cf : cell.faces) {
      const Face& face = mesh.face(cf.face);
      smallest_face = std::min(smallest_face, face.diameter);
      for (Index e : face.edges) shortest = std::min(shortest, mesh.edge(e).length);
      const Vector3 outward = cf.sign * face.normal;
      if ((cell.centroid - face.centroid).dot(outward) >= 0.0) q.centroid_in_kernel = false;
    }
    q.min_edge_over_h = shortest / cell.diameter;
    q.min_face_over_h = smallest_face / cell.diameter;
    report.min_edge_over_h = std::min(report.min_edge_over_h, q.min_edge_over_h);
    report.min_face_over_h = std::min(report.min_face_over_h, q.min_face_over_h);
    const std::string name = "cell " + std::to_string(ci);
    if (!q.centroid_in_kernel) report.warnings.push_back("A1: " + name + " centroid outside its kernel");
    if (q.min_edge_over_h < thresholds.min_edge_ratio)
      report.warnings.push_back("A3: " + name + " edge/diameter ratio below threshold");
    if (q.min_face_over_h < thresholds.min_face_ratio)
      report.warnings.push_back("A3: " + name + " face/diameter ratio below threshold");
  }
  return report;
}

}  // namespace vem6
