#pragma once

#include <array>
#include <span>
#include <vector>

#include "vem6/common.hpp"

namespace vem6 {

/// Relative tolerance (times h_f) for vertex coplanarity on a face.
inline constexpr double kPlanarityTol = 1e-9;

struct Edge {
  std::array<Index, 2> vertices{};
  double length = 0.0;
  bool boundary = false;
};

/// Planar polygonal face. The vertex loop is counter-clockwise about
/// `normal`; (t1, t2, normal) is a right-handed orthonormal frame.
struct Face {
  std::vector<Index> vertices;
  /// edges[i] joins vertices[i] and vertices[i + 1] (cyclically).
  std::vector<Index> edges;
  Point3 centroid = Point3::Zero();
  Vector3 t1 = Vector3::Zero();
  Vector3 t2 = Vector3::Zero();
  Vector3 normal = Vector3::Zero();
  double diameter = 0.0;
  double area = 0.0;
  bool boundary = false;
  /// Incident cells; the second entry is -1 on boundary faces.
  std::array<Index, 2> cells{-1, -1};

  /// Coordinates of a point in the face frame, centred at the centroid.
  Point2 to_local(const Point3& x) const {
    const Vector3 d = x - centroid;
    return {d.dot(t1), d.dot(t2)};
  }
};

/// A cell face with its orientation: sign * face.normal points outward.
struct CellFace {
  Index face = -1;
  int sign = 1;
};

struct Cell {
  std::vector<CellFace> faces;
  /// Sorted list of the cell's vertices; this is the local dof order.
  std::vector<Index> vertices;
  Point3 centroid = Point3::Zero();
  double diameter = 0.0;
  double volume = 0.0;
};

/// Immutable polyhedral mesh. Construct through PolyMesh::build (which
/// validates every invariant) or one of the generators.
class PolyMesh {
 public:
  using FaceLoop = std::vector<Index>;
  using CellFaces = std::vector<CellFace>;

  /// Builds and validates a mesh. Edges, geometry and boundary flags are
  /// derived. Throws ValidationError naming the offending entity.
  static PolyMesh build(std::vector<Point3> vertices, std::vector<FaceLoop> faces,
                        std::vector<CellFaces> cells);

  std::span<const Point3> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Face> faces() const { return faces_; }
  std::span<const Cell> cells() const { return cells_; }

  const Point3& vertex(Index i) const { return vertices_[static_cast<std::size_t>(i)]; }
  const Edge& edge(Index i) const { return edges_[static_cast<std::size_t>(i)]; }
  const Face& face(Index i) const { return faces_[static_cast<std::size_t>(i)]; }
  const Cell& cell(Index i) const { return cells_[static_cast<std::size_t>(i)]; }

  Index num_vertices() const { return static_cast<Index>(vertices_.size()); }
  Index num_edges() const { return static_cast<Index>(edges_.size()); }
  Index num_faces() const { return static_cast<Index>(faces_.size()); }
  Index num_cells() const { return static_cast<Index>(cells_.size()); }

  bool is_boundary_vertex(Index v) const { return boundary_vertex_[static_cast<std::size_t>(v)]; }
  /// Boundary faces touching vertex v.
  std::span<const Index> boundary_faces_of_vertex(Index v) const {
    return vertex_boundary_faces_[static_cast<std::size_t>(v)];
  }

 private:
  std::vector<Point3> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::vector<Cell> cells_;
  std::vector<bool> boundary_vertex_;
  std::vector<std::vector<Index>> vertex_boundary_faces_;
};

/// Structured mesh of n^3 cubes on the unit cube.
PolyMesh generate_cube_mesh(int n);

/// Unit cube split into n^3 cubes, each cut into 6 tetrahedra sharing the
/// main diagonal (Kuhn split), which is conforming across cubes.
PolyMesh generate_tet_mesh(int n);

/// Mean cell diameter (1/N_P) sum_P h_P.
double mesh_size(const PolyMesh& mesh);

/// Cell volume by tetrahedral subdivision from the vertex average, used as an
/// independent check against the divergence-theorem volume.
double subdivision_volume(const PolyMesh& mesh, Index cell);

/// Integral of u^a v^b over a planar polygon given by counter-clockwise 2-D
/// vertices, with (u, v) measured from the origin. Exact (Green's theorem
/// reduction to edge integrals).
double polygon_monomial_integral(std::span<const Point2> loop, int a, int b);

}  // namespace vem6
