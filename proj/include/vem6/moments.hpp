#pragma once

#include <vector>

#include "vem6/mesh.hpp"
#include "vem6/polynomial.hpp"

namespace vem6 {

/// Exact integrals of the scaled monomials of a region for all |a| <= degree,
/// in exponents2 / exponents3 order. values[0] is the region measure.
struct MomentTable {
  int degree = 0;
  std::vector<double> values;

  double operator[](std::size_t i) const { return values[i]; }
};

/// Scaled monomial basis of a cell (center x_P, scale h_P).
CellBasis cell_basis(const Cell& cell, int degree);
/// Scaled monomial basis of a face (center x_f, scale h_f, face frame).
FaceBasis face_basis(const Face& face, int degree);

/// Face moments via Green's theorem reduced to exact edge integrals.
MomentTable integrate_monomials_face(const PolyMesh& mesh, Index face, int degree);

/// Cell moments via the divergence theorem (cell -> faces), then face moments
/// via edge reduction.
MomentTable integrate_monomials_cell(const PolyMesh& mesh, Index cell, int degree);

/// int_f of a cell polynomial restricted to face f, given the face moments.
double integrate_on_face(const Poly2& restricted, const MomentTable& face_moments);

}  // namespace vem6
