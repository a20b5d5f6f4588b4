#include "vem6/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include <Eigen/Geometry>

#include "vem6/gauss.hpp"

namespace vem6 {

namespace {

std::string entity(const char* kind, std::size_t i) { return std::string(kind) + " " + std::to_string(i); }

double max_pairwise_distance(std::span<const Point3> pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, (pts[i] - pts[j]).norm());
  return d;
}

bool segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  auto cross = [](const Point2& o, const Point2& p, const Point2& q) {
    return (p.x() - o.x()) * (q.y() - o.y()) - (p.y() - o.y()) * (q.x() - o.x());
  };
  const double d1 = cross(c, d, a), d2 = cross(c, d, b);
  const double d3 = cross(a, b, c), d4 = cross(a, b, d);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

void compute_face_geometry(Face& face, std::span<const Point3> verts, std::size_t fi) {
  const auto& loop = face.vertices;
  const std::size_t m = loop.size();
  if (m < 3) throw ValidationError(entity("face", fi) + " has fewer than 3 vertices");
  {
    std::vector<Index> sorted(loop);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ValidationError(entity("face", fi) + " repeats a vertex");
  }
  for (Index v : loop)
    if (v < 0 || static_cast<std::size_t>(v) >= verts.size())
      throw ValidationError(entity("face", fi) + " references a missing vertex");

  std::vector<Point3> pts(m);
  for (std::size_t i = 0; i < m; ++i) pts[i] = verts[static_cast<std::size_t>(loop[i])];

  // Newell normal; its length is twice the area for a planar loop.
  Vector3 newell = Vector3::Zero();
  for (std::size_t i = 0; i < m; ++i) newell += pts[i].cross(pts[(i + 1) % m]);
  const double twice_area = newell.norm();
  face.diameter = max_pairwise_distance(pts);
  if (face.diameter <= 0.0 || twice_area <= 1e-14 * face.diameter * face.diameter)
    throw ValidationError(entity("face", fi) + " is degenerate (zero area)");
  face.normal = newell / twice_area;

  Vector3 t1 = pts[1] - pts[0];
  t1 -= t1.dot(face.normal) * face.normal;
  face.t1 = t1.normalized();
  face.t2 = face.normal.cross(face.t1);

  // Area and centroid in the frame anchored at the first vertex.
  std::vector<Point2> loc(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vector3 d = pts[i] - pts[0];
    loc[i] = {d.dot(face.t1), d.dot(face.t2)};
  }
  double area2 = 0.0;
  Point2 c = Point2::Zero();
  for (std::size_t i = 0; i < m; ++i) {
    const Point2& p = loc[i];
    const Point2& q = loc[(i + 1) % m];
    const double w = p.x() * q.y() - q.x() * p.y();
    area2 += w;
    c += w * (p + q);
  }
  if (area2 <= 0.0) throw ValidationError(entity("face", fi) + " is degenerate (zero area)");
  face.area = 0.5 * area2;
  c /= 3.0 * area2;
  face.centroid = pts[0] + c.x() * face.t1 + c.y() * face.t2;

  const double tol = kPlanarityTol * face.diameter;
  for (std::size_t i = 0; i < m; ++i)
    if (std::abs((pts[i] - face.centroid).dot(face.normal)) > tol)
      throw ValidationError(entity("face", fi) + " is not planar");

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;
      if (segments_intersect(loc[i], loc[(i + 1) % m], loc[j], loc[(j + 1) % m]))
        throw ValidationError(entity("face", fi) + " is not a simple polygon");
    }
}

}  // namespace

double polygon_monomial_integral(std::span<const Point2> loop, int a, int b) {
  // For u^a v^b homogeneous of degree d about the origin,
  //   int_f p = 1/(2+d) * sum_e (x0 dy - y0 dx) int_0^1 p(x0 + t d) dt.
  const int d = a + b;
  const auto& rule = gauss_legendre(d / 2 + 1);
  const std::size_t m = loop.size();
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const Point2& p0 = loop[i];
    const Point2 dp = loop[(i + 1) % m] - p0;
    const double flux = p0.x() * dp.y() - p0.y() * dp.x();
    if (flux == 0.0) continue;
    double line = 0.0;
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      const Point2 x = p0 + rule.points[q] * dp;
      line += rule.weights[q] * std::pow(x.x(), a) * std::pow(x.y(), b);
    }
    total += flux * line;
  }
  return total / (2.0 + d);
}

PolyMesh PolyMesh::build(std::vector<Point3> vertices, std::vector<FaceLoop> face_loops,
                         std::vector<CellFaces> cell_faces) {
  PolyMesh mesh;
  mesh.vertices_ = std::move(vertices);
  for (std::size_t i = 0; i < mesh.vertices_.size(); ++i)
    if (!mesh.vertices_[i].allFinite()) throw ValidationError(entity("vertex", i) + " is not finite");

  mesh.faces_.resize(face_loops.size());
  std::map<std::pair<Index, Index>, Index> edge_ids;
  for (std::size_t fi = 0; fi < face_loops.size(); ++fi) {
    Face& face = mesh.faces_[fi];
    face.vertices = std::move(face_loops[fi]);
    compute_face_geometry(face, mesh.vertices_, fi);
    const std::size_t m = face.vertices.size();
    face.edges.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      Index a = face.vertices[i], b = face.vertices[(i + 1) % m];
      auto key = std::minmax(a, b);
      auto [it, inserted] = edge_ids.try_emplace({key.first, key.second}, static_cast<Index>(mesh.edges_.size()));
      if (inserted) {
        Edge e;
        e.vertices = {key.first, key.second};
        e.length = (mesh.vertex(key.first) - mesh.vertex(key.second)).norm();
        mesh.edges_.push_back(e);
      }
      face.edges[i] = it->second;
    }
  }

  mesh.cells_.resize(cell_faces.size());
  std::vector<int> face_use(mesh.faces_.size(), 0);
  std::vector<int> face_first_sign(mesh.faces_.size(), 0);
  for (std::size_t ci = 0; ci < cell_faces.size(); ++ci) {
    Cell& cell = mesh.cells_[ci];
    cell.faces = std::move(cell_faces[ci]);
    if (cell.faces.size() < 4) throw ValidationError(entity("cell", ci) + " not closed (fewer than 4 faces)");

    std::vector<Index> verts;
    // Directed edge multiset: a closed, consistently oriented surface uses
    // every edge exactly once in each direction.
    std::map<std::pair<Index, Index>, int> directed;
    for (const CellFace& cf : cell.faces) {
      if (cf.face < 0 || static_cast<std::size_t>(cf.face) >= mesh.faces_.size())
        throw ValidationError(entity("cell", ci) + " references a missing face");
      if (cf.sign != 1 && cf.sign != -1) throw ValidationError(entity("cell", ci) + " has a face sign other than +-1");
      const auto fidx = static_cast<std::size_t>(cf.face);
      Face& face = mesh.faces_[fidx];
      if (face_use[fidx] == 2) throw ValidationError(entity("face", fidx) + " is shared by more than two cells");
      if (face_use[fidx] == 1) {
        if (face_first_sign[fidx] == cf.sign)
          throw ValidationError(entity("face", fidx) + " has the same orientation in both cells");
        face.cells[1] = static_cast<Index>(ci);
      } else {
        face.cells[0] = static_cast<Index>(ci);
        face_first_sign[fidx] = cf.sign;
      }
      ++face_use[fidx];
      const std::size_t m = face.vertices.size();
      for (std::size_t i = 0; i < m; ++i) {
        Index a = face.vertices[i], b = face.vertices[(i + 1) % m];
        if (cf.sign < 0) std::swap(a, b);
        ++directed[{a, b}];
        verts.push_back(a);
      }
    }
    for (const auto& [edge, count] : directed) {
      auto rev = directed.find({edge.second, edge.first});
      if (count != 1 || rev == directed.end() || rev->second != 1)
        throw ValidationError(entity("cell", ci) + " not closed");
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    cell.vertices = std::move(verts);

    std::vector<Point3> pts;
    pts.reserve(cell.vertices.size());
    for (Index v : cell.vertices) pts.push_back(mesh.vertex(v));
    cell.diameter = max_pairwise_distance(pts);

    // Divergence theorem about the vertex average:
    //   |P| = 1/3 sum_f s_f ((x_f - r) . n_f) |f|
    //   int_P (x - r)_i = 1/2 sum_f s_f n_{f,i} int_f (x - r)_i^2
    Point3 ref = Point3::Zero();
    for (const auto& p : pts) ref += p;
    ref /= static_cast<double>(pts.size());
    double volume = 0.0;
    Vector3 first = Vector3::Zero();
    Vector3 closure = Vector3::Zero();
    double surface = 0.0;
    for (const CellFace& cf : cell.faces) {
      const Face& face = mesh.face(cf.face);
      const Vector3 c = face.centroid - ref;
      volume += cf.sign * c.dot(face.normal) * face.area;
      closure += cf.sign * face.area * face.normal;
      surface += face.area;
      std::vector<Point2> loc;
      for (Index v : face.vertices) loc.push_back(face.to_local(mesh.vertex(v)));
      const double uu = polygon_monomial_integral(loc, 2, 0);
      const double uv = polygon_monomial_integral(loc, 1, 1);
      const double vv = polygon_monomial_integral(loc, 0, 2);
      for (int i = 0; i < 3; ++i) {
        const double a = face.t1[i], b = face.t2[i];
        const double sq = c[i] * c[i] * face.area + a * a * uu + 2 * a * b * uv + b * b * vv;
        first[i] += 0.5 * cf.sign * face.normal[i] * sq;
      }
    }
    volume /= 3.0;
    if (closure.lpNorm<Eigen::Infinity>() > 1e-10 * surface)
      throw ValidationError(entity("cell", ci) + " not closed");
    if (!(volume > 0.0)) throw ValidationError(entity("cell", ci) + " has inward-oriented faces");
    cell.volume = volume;
    cell.centroid = ref + first / volume;
  }
  for (std::size_t fi = 0; fi < mesh.faces_.size(); ++fi) {
    if (face_use[fi] == 0) throw ValidationError(entity("face", fi) + " is not referenced by any cell");
    mesh.faces_[fi].boundary = face_use[fi] == 1;
  }

  mesh.boundary_vertex_.assign(mesh.vertices_.size(), false);
  mesh.vertex_boundary_faces_.assign(mesh.vertices_.size(), {});
  for (std::size_t fi = 0; fi < mesh.faces_.size(); ++fi) {
    const Face& face = mesh.faces_[fi];
    if (!face.boundary) continue;
    for (Index v : face.vertices) {
      mesh.boundary_vertex_[static_cast<std::size_t>(v)] = true;
      mesh.vertex_boundary_faces_[static_cast<std::size_t>(v)].push_back(static_cast<Index>(fi));
    }
    for (Index e : face.edges) mesh.edges_[static_cast<std::size_t>(e)].boundary = true;
  }
  return mesh;
}

namespace {

// Collects outward-oriented polygon loops per cell and deduplicates shared
// faces; the first cell to emit a face fixes its stored orientation.
class CellAssembler {
 public:
  explicit CellAssembler(std::vector<Point3> vertices) : vertices_(std::move(vertices)) {}

  void add_cell(const std::vector<PolyMesh::FaceLoop>& outward_loops) {
    PolyMesh::CellFaces cf;
    for (const auto& loop : outward_loops) {
      std::vector<Index> key(loop);
      std::sort(key.begin(), key.end());
      auto it = lookup_.find(key);
      if (it == lookup_.end()) {
        const auto id = static_cast<Index>(faces_.size());
        faces_.push_back(loop);
        lookup_.emplace(std::move(key), id);
        cf.push_back({id, 1});
      } else {
        cf.push_back({it->second, same_orientation(faces_[static_cast<std::size_t>(it->second)], loop) ? 1 : -1});
      }
    }
    cells_.push_back(std::move(cf));
  }

  PolyMesh finish() { return PolyMesh::build(std::move(vertices_), std::move(faces_), std::move(cells_)); }

 private:
  static bool same_orientation(const PolyMesh::FaceLoop& stored, const PolyMesh::FaceLoop& loop) {
    const std::size_t m = stored.size();
    const auto pos = static_cast<std::size_t>(std::find(stored.begin(), stored.end(), loop[0]) - stored.begin());
    return stored[(pos + 1) % m] == loop[1];
  }

  std::vector<Point3> vertices_;
  std::vector<PolyMesh::FaceLoop> faces_;
  std::vector<PolyMesh::CellFaces> cells_;
  std::map<std::vector<Index>, Index> lookup_;
};

std::vector<Point3> lattice(int n) {
  std::vector<Point3> v;
  v.reserve(static_cast<std::size_t>((n + 1) * (n + 1) * (n + 1)));
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n; ++i) v.emplace_back(double(i) / n, double(j) / n, double(k) / n);
  return v;
}

// Corner c of the cube with lower index (i, j, k); bit 0 = x, 1 = y, 2 = z.
Index corner(int n, int i, int j, int k, int c) {
  const int ii = i + (c & 1), jj = j + ((c >> 1) & 1), kk = k + ((c >> 2) & 1);
  return ii + (n + 1) * (jj + (n + 1) * kk);
}

}  // namespace

PolyMesh generate_cube_mesh(int n) {
  if (n < 1) throw std::invalid_argument("cube mesh needs n >= 1");
  // Outward loops of the reference hexahedron in corner numbering.
  static constexpr int kHexFaces[6][4] = {{0, 4, 6, 2}, {1, 3, 7, 5}, {0, 1, 5, 4},
                                          {2, 6, 7, 3}, {0, 2, 3, 1}, {4, 5, 7, 6}};
  CellAssembler assembler(lattice(n));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        std::vector<PolyMesh::FaceLoop> loops;
        for (const auto& f : kHexFaces) {
          PolyMesh::FaceLoop loop;
          for (int c : f) loop.push_back(corner(n, i, j, k, c));
          loops.push_back(std::move(loop));
        }
        assembler.add_cell(loops);
      }
  return assembler.finish();
}

PolyMesh generate_tet_mesh(int n) {
  if (n < 1) throw std::invalid_argument("tetrahedral mesh needs n >= 1");
  static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto verts = lattice(n);
  CellAssembler assembler(verts);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        for (const auto& perm : kPerms) {
          std::array<Index, 4> tet{};
          int bits = 0;
          tet[0] = corner(n, i, j, k, bits);
          for (int s = 0; s < 3; ++s) {
            bits |= 1 << perm[s];
            tet[static_cast<std::size_t>(s + 1)] = corner(n, i, j, k, bits);
          }
          std::vector<PolyMesh::FaceLoop> loops;
          for (int skip = 0; skip < 4; ++skip) {
            PolyMesh::FaceLoop tri;
            for (int q = 0; q < 4; ++q)
              if (q != skip) tri.push_back(tet[static_cast<std::size_t>(q)]);
            const Point3& a = verts[static_cast<std::size_t>(tri[0])];
            const Point3& b = verts[static_cast<std::size_t>(tri[1])];
            const Point3& c = verts[static_cast<std::size_t>(tri[2])];
            const Point3& opp = verts[static_cast<std::size_t>(tet[static_cast<std::size_t>(skip)])];
            if ((b - a).cross(c - a).dot(opp - a) > 0) std::swap(tri[1], tri[2]);
            loops.push_back(std::move(tri));
          }
          assembler.add_cell(loops);
        }
  return assembler.finish();
}

double mesh_size(const PolyMesh& mesh) {
  if (mesh.num_cells() == 0) throw std::invalid_argument("mesh_size of an empty mesh");
  double sum = 0.0;
  for (const Cell& c : mesh.cells()) sum += c.diameter;
  return sum / static_cast<double>(mesh.num_cells());
}

double subdivision_volume(const PolyMesh& mesh, Index ci) {
  const Cell& cell = mesh.cell(ci);
  Point3 ref = Point3::Zero();
  for (Index v : cell.vertices) ref += mesh.vertex(v);
  ref /= static_cast<double>(cell.vertices.size());
  double vol = 0.0;
  for (const CellFace& cf : cell.faces) {
    const Face& face = mesh.face(cf.face);
    const std::size_t m = face.vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Vector3 a = mesh.vertex(face.vertices[i]) - ref;
      const Vector3 b = mesh.vertex(face.vertices[(i + 1) % m]) - ref;
      const Vector3 c = face.centroid - ref;
      vol += cf.sign * c.dot(a.cross(b)) / 6.0;
    }
  }
  return vol;
}

}  // namespace vem6
