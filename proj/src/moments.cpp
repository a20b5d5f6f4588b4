#include "vem6/moments.hpp"

#include <cmath>
#include <stdexcept>

namespace vem6 {

CellBasis cell_basis(const Cell& cell, int degree) { return {cell.centroid, cell.diameter, degree}; }

FaceBasis face_basis(const Face& face, int degree) { return {face.diameter, degree}; }

MomentTable integrate_monomials_face(const PolyMesh& mesh, Index fi, int degree) {
  if (degree < 0 || degree > kMaxDegree) throw std::invalid_argument("face moment degree out of range");
  const Face& face = mesh.face(fi);
  if (!(face.area > 0.0)) throw GeometryError("face " + std::to_string(fi) + " has zero area");
  std::vector<Point2> loop;
  loop.reserve(face.vertices.size());
  for (Index v : face.vertices) loop.push_back(face.to_local(mesh.vertex(v)));
  MomentTable table{degree, {}};
  for (const auto& [a, b] : exponents2(degree))
    table.values.push_back(polygon_monomial_integral(loop, a, b) / std::pow(face.diameter, a + b));
  return table;
}

MomentTable integrate_monomials_cell(const PolyMesh& mesh, Index ci, int degree) {
  if (degree < 0 || degree > kMaxDegree) throw std::invalid_argument("cell moment degree out of range");
  const Cell& cell = mesh.cell(ci);
  const CellBasis basis = cell_basis(cell, degree);
  const auto& ex = exponents3(degree);
  MomentTable table{degree, std::vector<double>(ex.size(), 0.0)};
  // m_a is homogeneous of degree |a| about x_P, so div((x - x_P) m_a) = (3 + |a|) m_a
  // and (x - x_P) . n is constant on each planar face.
  for (const CellFace& cf : cell.faces) {
    const Face& face = mesh.face(cf.face);
    const double flux = cf.sign * (face.centroid - cell.centroid).dot(face.normal);
    const MomentTable fm = integrate_monomials_face(mesh, cf.face, degree);
    for (std::size_t a = 0; a < ex.size(); ++a) {
      const Poly2 r = restrict_to_face(basis, ex[a], face.centroid, face.t1, face.t2, face.diameter);
      table.values[a] += flux * r.integrate(fm.values);
    }
  }
  for (std::size_t a = 0; a < ex.size(); ++a) table.values[a] /= 3.0 + ex[a][0] + ex[a][1] + ex[a][2];
  return table;
}

double integrate_on_face(const Poly2& restricted, const MomentTable& face_moments) {
  return restricted.integrate(face_moments.values);
}

}  // namespace vem6
