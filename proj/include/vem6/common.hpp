#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace vem6 {

using Index = std::int64_t;
using Point3 = Eigen::Vector3d;
using Vector3 = Eigen::Vector3d;
using Point2 = Eigen::Vector2d;

/// Raised when a geometric computation cannot proceed (degenerate face,
/// singular local system, inverted sub-tetrahedron, ...).
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when mesh input is syntactically malformed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a mesh violates a topological or geometric invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vem6
