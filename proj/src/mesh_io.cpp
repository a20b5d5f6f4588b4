#include "vem6/mesh_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace vem6 {

using nlohmann::json;

PolyMesh import_mesh(std::string_view content) {
  json doc;
  try {
    doc = json::parse(content.begin(), content.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("mesh file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("mesh file: top level must be an object");
  for (const char* key : {"vertices", "faces", "cells"})
    if (!doc.contains(key) || !doc[key].is_array())
      throw ParseError(std::string("mesh file: missing array \"") + key + "\"");

  std::vector<Point3> vertices;
  std::vector<PolyMesh::FaceLoop> faces;
  std::vector<PolyMesh::CellFaces> cells;
  try {
    for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
      const json& v = doc["vertices"][i];
      if (!v.is_array() || v.size() != 3)
        throw ParseError("mesh file: vertex " + std::to_string(i) + " must be [x, y, z]");
      vertices.emplace_back(v[0].get<double>(), v[1].get<double>(), v[2].get<double>());
    }
    for (std::size_t i = 0; i < doc["faces"].size(); ++i) {
      const json& f = doc["faces"][i];
      if (!f.is_array()) throw ParseError("mesh file: face " + std::to_string(i) + " must be an array");
      faces.push_back(f.get<std::vector<Index>>());
    }
    for (std::size_t i = 0; i < doc["cells"].size(); ++i) {
      const json& c = doc["cells"][i];
      if (!c.is_array()) throw ParseError("mesh file: cell " + std::to_string(i) + " must be an array");
      PolyMesh::CellFaces cf;
      for (const json& pair : c) {
        if (!pair.is_array() || pair.size() != 2)
          throw ParseError("mesh file: cell " + std::to_string(i) + " entries must be [face, sign]");
        cf.push_back({pair[0].get<Index>(), pair[1].get<int>()});
      }
      cells.push_back(std::move(cf));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("mesh file: ") + e.what());
  }
  return PolyMesh::build(std::move(vertices), std::move(faces), std::move(cells));
}

std::string export_mesh(const PolyMesh& mesh) {
  std::ostringstream out;
  out.precision(17);
  out << "{\n  \"vertices\": [";
  for (Index i = 0; i < mesh.num_vertices(); ++i) {
    const Point3& p = mesh.vertex(i);
    out << (i ? ",\n    " : "\n    ") << '[' << p.x() << ", " << p.y() << ", " << p.z() << ']';
  }
  out << "\n  ],\n  \"faces\": [";
  for (Index i = 0; i < mesh.num_faces(); ++i) {
    out << (i ? ",\n    " : "\n    ") << '[';
    const auto& loop = mesh.face(i).vertices;
    for (std::size_t k = 0; k < loop.size(); ++k) out << (k ? ", " : "") << loop[k];
    out << ']';
  }
  out << "\n  ],\n  \"cells\": [";
  for (Index i = 0; i < mesh.num_cells(); ++i) {
    out << (i ? ",\n    " : "\n    ") << '[';
    const auto& cf = mesh.cell(i).faces;
    for (std::size_t k = 0; k < cf.size(); ++k) out << (k ? ", " : "") << '[' << cf[k].face << ", " << cf[k].sign << ']';
    out << ']';
  }
  out << "\n  ]\n}\n";
  return out.str();
}

PolyMesh read_mesh_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open mesh file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return import_mesh(buf.str());
}

void write_mesh_file(const PolyMesh& mesh, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write mesh file: " + path.string());
  out << export_mesh(mesh);
}

}  // namespace vem6
